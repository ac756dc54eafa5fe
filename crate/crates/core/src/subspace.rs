//! Subspaces of `KG` over GF(2), kept in echelon form keyed by leading bit.

use std::fmt;

use crate::algebra::AlgebraElement;
use crate::group::GroupSpec;

const WIDTH: usize = 256;

// coefficient of a^i is bit i, coefficient of a^i b is bit 128 + i
fn leading_bit(w: &[u128; 2]) -> Option<usize> {
    if w[1] != 0 {
        Some(255 - w[1].leading_zeros() as usize)
    } else if w[0] != 0 {
        Some(127 - w[0].leading_zeros() as usize)
    } else {
        None
    }
}

#[derive(Clone)]
pub struct Subspace {
    spec: GroupSpec,
    rows: Vec<[u128; 2]>,
    pivots: Vec<Option<u16>>,
}

impl Subspace {
    pub fn zero(spec: GroupSpec) -> Self {
        Subspace {
            spec,
            rows: Vec::new(),
            pivots: vec![None; WIDTH],
        }
    }

    /// The whole algebra, spanned by the group elements.
    pub fn full(spec: GroupSpec) -> Self {
        Self::span(spec, spec.elements().map(|g| AlgebraElement::monomial(spec, g)))
    }

    pub fn span(spec: GroupSpec, xs: impl IntoIterator<Item = AlgebraElement>) -> Self {
        let mut s = Self::zero(spec);
        for x in xs {
            s.insert(&x);
        }
        s
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    fn reduce(&self, mut w: [u128; 2]) -> [u128; 2] {
        while let Some(p) = leading_bit(&w) {
            match self.pivots[p] {
                Some(r) => {
                    let row = &self.rows[r as usize];
                    w[0] ^= row[0];
                    w[1] ^= row[1];
                }
                None => break,
            }
        }
        w
    }

    /// Adds `x`; returns the new echelon row if `x` was not already in the span.
    pub fn insert(&mut self, x: &AlgebraElement) -> Option<AlgebraElement> {
        debug_assert_eq!(x.spec(), self.spec);
        let w = self.reduce(x.words());
        let p = leading_bit(&w)?;
        self.pivots[p] = Some(self.rows.len() as u16);
        self.rows.push(w);
        Some(AlgebraElement::from_words(self.spec, w))
    }

    pub fn contains(&self, x: &AlgebraElement) -> bool {
        leading_bit(&self.reduce(x.words())).is_none()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows
            .iter()
            .all(|w| other.contains(&AlgebraElement::from_words(self.spec, *w)))
    }

    /// Echelon rows in insertion order; spans the subspace.
    pub fn rows(&self) -> impl Iterator<Item = AlgebraElement> + '_ {
        self.rows
            .iter()
            .map(|w| AlgebraElement::from_words(self.spec, *w))
    }

    /// Reduced row-echelon basis, sorted by descending pivot.
    pub fn basis(&self) -> Vec<AlgebraElement> {
        let mut order: Vec<(usize, [u128; 2])> = self
            .rows
            .iter()
            .map(|w| (leading_bit(w).expect("rows are nonzero"), *w))
            .collect();
        order.sort_by_key(|(p, _)| std::cmp::Reverse(*p));
        let pivots: Vec<usize> = order.iter().map(|(p, _)| *p).collect();
        for i in 0..order.len() {
            for j in 0..order.len() {
                if i == j {
                    continue;
                }
                let p = pivots[j];
                let row_j = order[j].1;
                let w = &mut order[i].1;
                if w[p / 128] >> (p % 128) & 1 == 1 {
                    w[0] ^= row_j[0];
                    w[1] ^= row_j[1];
                }
            }
        }
        order
            .into_iter()
            .map(|(_, w)| AlgebraElement::from_words(self.spec, w))
            .collect()
    }

    /// Smallest two-sided ideal containing the subspace. Closing under left and
    /// right multiplication by the generators `a`, `b` closes under all of `G`.
    pub fn ideal_closure(mut self) -> Self {
        let gens = [self.spec.a(), self.spec.b()];
        let mut queue: Vec<AlgebraElement> = self.rows().collect();
        while let Some(x) = queue.pop() {
            for &g in &gens {
                for y in [x.mul_monomial_left(g), x.mul_monomial_right(g)] {
                    if let Some(row) = self.insert(&y) {
                        queue.push(row);
                    }
                }
            }
        }
        self
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
            && self.dim() == other.dim()
            && self.is_subspace_of(other)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace({}, dim {})", self.spec, self.dim())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Family;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn full_space_has_group_order_dimension() {
        for n in 3..=8 {
            let spec = GroupSpec::new(Family::Quaternion, n).unwrap();
            assert_eq!(Subspace::full(spec).dim(), spec.order());
        }
    }

    #[test]
    fn membership_and_rref() {
        let spec = GroupSpec::new(Family::Dihedral, 4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let xs: Vec<_> = (0..6).map(|_| AlgebraElement::random(spec, &mut rng)).collect();
        let s = Subspace::span(spec, xs.iter().copied());
        assert!(s.dim() <= 6);
        assert!(xs.iter().all(|x| s.contains(x)));
        assert!(s.contains(&(xs[0] + xs[3])));
        let basis = s.basis();
        assert_eq!(basis.len(), s.dim());
        assert_eq!(Subspace::span(spec, basis.iter().copied()), s);
        // reduced: every pivot appears in exactly one basis row
        for (i, x) in basis.iter().enumerate() {
            let p = leading_bit(&x.words()).unwrap();
            for (j, y) in basis.iter().enumerate() {
                if i != j {
                    assert_eq!(y.words()[p / 128] >> (p % 128) & 1, 0);
                }
            }
        }
    }

    #[test]
    fn augmentation_ideal_is_an_ideal() {
        let spec = GroupSpec::new(Family::Semidihedral, 4).unwrap();
        let one = AlgebraElement::one(spec);
        let delta = Subspace::span(
            spec,
            spec.elements()
                .map(|g| AlgebraElement::monomial(spec, g) + one),
        );
        assert_eq!(delta.dim(), spec.order() - 1);
        assert_eq!(delta.clone().ideal_closure().dim(), delta.dim());
        let a_minus = Subspace::span(spec, [AlgebraElement::a(spec) + one]).ideal_closure();
        assert!(a_minus.is_subspace_of(&delta));
    }
}
