//! Reference arithmetic for GF(2)[G]: coefficient vectors indexed by
//! `i + j * 2^(n-1)` for `a^i b^j`, multiplied by direct convolution using
//! the presentation of G. Shares nothing with the library's arithmetic.
#![allow(dead_code)]

use maxclass::algebra::AlgebraElement;
use maxclass::group::{Family, GroupSpec};

#[derive(Clone, Copy)]
pub struct Oracle {
    pub spec: GroupSpec,
    half: usize,
    /// b a b^-1 = a^conj
    conj: usize,
    /// b^2 = a^square
    square: usize,
}

impl Oracle {
    pub fn new(family: Family, n: u32) -> Self {
        let half = 1usize << (n - 1);
        let (conj, square) = match family {
            Family::Dihedral => (half - 1, 0),
            Family::Semidihedral => (half / 2 - 1, 0),
            Family::Quaternion => (half - 1, half / 2),
        };
        Oracle {
            spec: GroupSpec::new(family, n).unwrap(),
            half,
            conj,
            square,
        }
    }

    pub fn size(&self) -> usize {
        2 * self.half
    }

    /// (a^i b^j)(a^k b^l) = a^(i + k conj^j + j l square) b^(j + l)
    pub fn group_mul(&self, x: usize, y: usize) -> usize {
        let (i, j) = (x % self.half, x / self.half);
        let (k, l) = (y % self.half, y / self.half);
        let k = if j == 1 { k * self.conj % self.half } else { k };
        let e = (i + k + if j == 1 && l == 1 { self.square } else { 0 }) % self.half;
        e + ((j + l) % 2) * self.half
    }

    pub fn mul(&self, x: &[u8], y: &[u8]) -> Vec<u8> {
        let mut out = vec![0u8; self.size()];
        for (g, &cx) in x.iter().enumerate() {
            if cx == 0 {
                continue;
            }
            for (h, &cy) in y.iter().enumerate() {
                if cy != 0 {
                    out[self.group_mul(g, h)] ^= 1;
                }
            }
        }
        out
    }

    pub fn one(&self) -> Vec<u8> {
        let mut v = vec![0u8; self.size()];
        v[0] = 1;
        v
    }

    pub fn pow(&self, x: &[u8], e: u64) -> Vec<u8> {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, x))
    }

    /// Inverse of a unit as x^(2^(n-1) - 1), since unit orders divide 2^(n-1).
    pub fn inverse(&self, x: &[u8]) -> Vec<u8> {
        let inv = self.pow(x, self.half as u64 - 1);
        assert_eq!(self.mul(&inv, x), self.one(), "not a unit");
        inv
    }

    pub fn element(&self, x: &[u8]) -> AlgebraElement {
        let pack = |part: &[u8]| {
            part.iter()
                .enumerate()
                .fold(0u128, |acc, (i, &c)| acc | ((c as u128) << i))
        };
        AlgebraElement::from_bits(self.spec, pack(&x[..self.half]), pack(&x[self.half..]))
    }

    pub fn vector(&self, x: &AlgebraElement) -> Vec<u8> {
        let (x1, x2) = (x.x1().bits(), x.x2().bits());
        (0..self.size())
            .map(|g| {
                let w = if g < self.half { x1 } else { x2 };
                ((w >> (g % self.half)) & 1) as u8
            })
            .collect()
    }

    pub fn vector_from_bits(&self, bits: u64) -> Vec<u8> {
        (0..self.size()).map(|g| ((bits >> g) & 1) as u8).collect()
    }

    pub fn random<R: rand::Rng>(&self, rng: &mut R) -> Vec<u8> {
        (0..self.size()).map(|_| rng.gen_range(0..2)).collect()
    }

    pub fn random_unit<R: rand::Rng>(&self, rng: &mut R) -> Vec<u8> {
        let mut x = self.random(rng);
        if x.iter().filter(|&&c| c == 1).count() % 2 == 0 {
            x[0] ^= 1;
        }
        x
    }

    /// a^i b^j as a vector.
    pub fn monomial(&self, i: usize, j: usize) -> Vec<u8> {
        let mut v = vec![0u8; self.size()];
        v[i % self.half + j * self.half] = 1;
        v
    }

    pub fn add(&self, x: &[u8], y: &[u8]) -> Vec<u8> {
        x.iter().zip(y).map(|(p, q)| p ^ q).collect()
    }

    /// A = a + (1+a) b (D, S) or a^(2^(n-3)+1) + (1+a) b (Q).
    pub fn unit_a(&self) -> Vec<u8> {
        let lead = if self.square != 0 { self.half / 4 + 1 } else { 1 };
        let mut v = self.monomial(lead, 0);
        v = self.add(&v, &self.monomial(0, 1));
        self.add(&v, &self.monomial(1, 1))
    }

    pub fn conjugate(&self, x: &[u8], f: &[u8]) -> Vec<u8> {
        self.mul(&self.mul(&self.inverse(f), x), f)
    }
}
