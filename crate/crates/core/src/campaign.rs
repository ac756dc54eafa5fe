//! The verification campaign: a registry of checks, each with the families and
//! range of `n` it supports, and a driver that runs them over a grid.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Family, GroupSpec, MAX_N};
use crate::lie;
use crate::properties as prop;
use crate::report::{Entry, Outcome, VerificationReport};
use crate::wreath;

type Runner = fn(GroupSpec, &mut ChaCha8Rng) -> Result<Outcome>;

/// Supported `n` per family, in the order dihedral, semidihedral, quaternion.
type Ranges = [Option<(u32, u32)>; 3];

fn all_families(lo: u32, hi: u32) -> Ranges {
    [Some((lo, hi)); 3]
}

fn ds_only(lo: u32, hi: u32) -> Ranges {
    [Some((lo, hi)), Some((lo, hi)), None]
}

fn q_only(lo: u32, hi: u32) -> Ranges {
    [None, None, Some((lo, hi))]
}

pub const RANDOM_SAMPLES: usize = 10_000;

pub struct CheckInfo {
    pub id: &'static str,
    pub title: &'static str,
    pub claim: &'static str,
    pub method: &'static str,
    ranges: Ranges,
    run: Runner,
}

impl CheckInfo {
    /// Supported `(n_min, n_max)` for a family, or `None` if the check does not apply.
    pub fn range(&self, family: Family) -> Option<(u32, u32)> {
        self.ranges[family_slot(family)]
    }

    pub fn run(&self, spec: GroupSpec, rng: &mut ChaCha8Rng) -> Result<Outcome> {
        (self.run)(spec, rng)
    }
}

fn family_slot(f: Family) -> usize {
    match f {
        Family::Dihedral => 0,
        Family::Semidihedral => 1,
        Family::Quaternion => 2,
    }
}

fn index_identities(spec: GroupSpec) -> Outcome {
    let row = lie::index_row(spec);
    let derived = spec.derived_order();
    Outcome::check(
        row.t_lower == row.t_upper && row.t_aug + 1 == row.t_lower && row.t_aug == derived,
        serde_json::to_value(&row).unwrap_or_default(),
        || serde_json::json!({"derived_order": derived}),
    )
}

fn registry_table() -> Vec<CheckInfo> {
    vec![
        CheckInfo {
            id: "arithmetic",
            title: "component multiplication",
            claim: "(f1 + f2 b)(h1 + h2 b) = (f1 h1 + f2 bar(h2) alpha) + (f2 bar(h1) + f1 h2) b, with alpha = b^2",
            method: "every pair of group elements, then random pairs against monomial convolution",
            ranges: all_families(3, 6),
            run: |s, r| Ok(prop::arithmetic_check(s, 2_000, r)),
        },
        CheckInfo {
            id: "inverse",
            title: "closed-form inverse",
            claim: "a unit f = f1 + f2 b has inverse (bar(f1) + f2 b) R^-1 with R = f1 bar(f1) + f2 bar(f2) alpha",
            method: "all units at n = 3, random units otherwise; checks f f^-1 = f^-1 f = 1",
            ranges: all_families(3, 8),
            run: |s, r| Ok(prop::inverse_check(s, RANDOM_SAMPLES, r)),
        },
        CheckInfo {
            id: "power_formula",
            title: "2^k-th powers",
            claim: "x^(2^k) has the closed form in terms of x1, x2 and the norm, for every k",
            method: "random elements, closed form against repeated squaring for k = 0..n",
            ranges: all_families(3, 8),
            run: |s, r| Ok(prop::power_formula_check(s, RANDOM_SAMPLES / 10, r)),
        },
        CheckInfo {
            id: "conjugation",
            title: "conjugating self-conjugated units",
            claim: "for h = bar(h): f^-1 h f = t1 + t2 b, t1 = h1 + h2 (f1 f2 + bar(f1) bar(f2)) alpha R^-1, t2 = h2 (bar(f1)^2 + f2^2 alpha) R^-1",
            method: "random self-conjugated h and random units f, closed form against direct product",
            ranges: all_families(3, 8),
            run: |s, r| Ok(prop::conjugation_check(s, 1_000, r)),
        },
        CheckInfo {
            id: "order_of_A_ds",
            title: "order of A, dihedral and semidihedral",
            claim: "A = a + (1+a) b has order 2^(n-1); A^(2^(n-2)) is its least power commuting with b and has second component equal to the sum of all powers of a",
            method: "repeated squaring of A; direct comparison of components",
            ranges: ds_only(3, 8),
            run: |s, _| {
                Ok(Outcome::all(vec![
                    ("order", prop::order_of_a_check(s)),
                    ("second_component", prop::second_component_check(s)),
                ]))
            },
        },
        CheckInfo {
            id: "order_of_A_q",
            title: "order of A, generalized quaternion",
            claim: "A = a^(2^(n-3)+1) + (1+a) b has order 2^(n-1), and A^(2^(n-2)) is its least power commuting with b",
            method: "repeated squaring of A; commutation with b for each power",
            ranges: q_only(3, 8),
            run: |s, _| Ok(prop::order_of_a_check(s)),
        },
        CheckInfo {
            id: "quaternion_components",
            title: "second components of A^N and (Ab)^N",
            claim: "with N = 2^(n-2): A^N has second component sum(<a>) and (Ab)^N has second component sum(<a^2>), unchanged by the factor b^2; needs (1 + a^(N+2))^(N-1) = sum(<a^2>), which requires n >= 4",
            method: "direct powering and comparison of components",
            ranges: q_only(4, 8),
            run: |s, _| wreath::quaternion_components_check(s),
        },
        CheckInfo {
            id: "h_kernel",
            title: "the subgroup H(KG) and the kernel of psi",
            claim: "H = { h1 + h2 b : h1 + h2 = 1 } is a subgroup, psi(h) = 1 + h1 + bar(h1) has kernel C_H(b), and C_H(b) is elementary abelian",
            method: "exhaustive scan of H",
            ranges: ds_only(3, 5),
            run: |s, _| prop::h_kernel_check(s),
        },
        CheckInfo {
            id: "tower_closed_form",
            title: "closed forms for b^(A^k)",
            claim: "D, S: b^(A^k) = 1 + R^k + R^k b; Q: b^(A^k) = beta sum_{i=-1}^{k-2} (b^2 R)^i + (b^2 R)^k b, for 1 <= k <= 2^(n-2)",
            method: "closed forms against iterated conjugation by A",
            ranges: all_families(3, 8),
            run: |s, _| Ok(prop::tower_closed_form_check(s)),
        },
        CheckInfo {
            id: "tower_relations",
            title: "commuting towers",
            claim: "b^(A^i) b^(A^j) = b^(A^j) b^(A^i); in D and S each b^(A^k) is an involution; (b, k.A)^2 = 1 for every k",
            method: "all pairs of towers; left-normed commutators up to length 2^(n-1)",
            ranges: all_families(3, 6),
            run: |s, _| Ok(prop::tower_relations_check(s)),
        },
        CheckInfo {
            id: "commutator_identities",
            title: "collapsing commutators",
            claim: "(b, k.A, A^(2^m)) = (b, (k + 2^m).A) and (b, A^(2^m)) = (b, 2^m.A)",
            method: "all 1 <= k <= 2^(n-2) and 0 <= m <= n-2",
            ranges: all_families(3, 6),
            run: |s, _| Ok(prop::commutator_identities_check(s)),
        },
        CheckInfo {
            id: "direct_decomposition",
            title: "direct decomposition of the tower subgroup",
            claim: "<b, b^A, ..., b^(A^(N-1))> is the direct product of the 2^(n-2) cyclic groups of order 2",
            method: "every nonzero exponent vector, products in Gray-code order, none equal to 1",
            ranges: ds_only(3, 6),
            run: |s, _| prop::direct_decomposition_check(s),
        },
        CheckInfo {
            id: "quaternion_intersection",
            title: "intersections of tower subgroups",
            claim: "<b^(A^i)> and <b^(A^j)> meet in <b^2> for i != j, and the towers commute",
            method: "explicit cyclic subgroups of order 4 for every pair",
            ranges: q_only(3, 6),
            run: |s, _| prop::quaternion_intersection_check(s),
        },
        CheckInfo {
            id: "lie_indices",
            title: "Lie nilpotency indices",
            claim: "t_L(G) = t^L(G) and t(G') = t_L(G) - 1 = |G'|",
            method: "Lie powers and augmentation powers as explicit subspaces over GF(2)",
            ranges: all_families(3, 8),
            run: |s, _| Ok(index_identities(s)),
        },
        CheckInfo {
            id: "quaternion_class",
            title: "class of U(KG) for generalized quaternion groups",
            claim: "cl U(KG) = |G'|: [b, k.a] = (a + a^-1)^k b for k < 2^(n-2), [b, (2^(n-2) - 1).a] = a sum(<a^2>) b != 0, t_L = 2^(n-2) + 1",
            method: "repeated Lie brackets and subspace saturation; at n = 3 the lower central series of all 128 units",
            ranges: q_only(3, 8),
            run: |s, _| lie::verify_quaternion_class(s),
        },
        CheckInfo {
            id: "exponent",
            title: "exponent of U(KG)",
            claim: "exp U(KG) = exp G = 2^(n-1), together with t^L(G) <= 1 + 2^(n-2)",
            method: "all units at n = 3, random units otherwise; t^L from subspace saturation",
            ranges: all_families(3, 5),
            run: |s, r| Ok(lie::exponent_check(s, RANDOM_SAMPLES, r)),
        },
        CheckInfo {
            id: "lie_metabelian",
            title: "Lie centrally metabelian",
            claim: "[[[x, y], [z, w]], v] = 0 for all x, y, z, w, v in KG",
            method: "all 5-tuples of group elements, which suffices by multilinearity",
            ranges: all_families(3, 5),
            run: |s, _| Ok(lie::lie_centrally_metabelian_check(s)),
        },
        CheckInfo {
            id: "wreath_section",
            title: "C2 wr G' as a section of U(KG)",
            claim: "F = <b, b^A, ..., b^(A^(N-1)), A> modulo <A^N> (D, S) or <b^2, A^N> (Q) is isomorphic to C2 wr C_N, N = 2^(n-2); its order is 2^(N + n - 2) and its class N",
            method: "closure in U(KG), verified normality, coset table; explicit isomorphism up to order 512, invariant fingerprint and witness commutator above",
            ranges: all_families(3, 5),
            run: |s, _| wreath::section_check(s),
        },
        CheckInfo {
            id: "quaternion_nonmembership",
            title: "the witness lies outside <b^2, A^N>",
            claim: "(b A^-1)^N and (A b)^N are not in <b^2> <A^N>, N = 2^(n-2)",
            method: "explicit membership test in the enumerated subgroup",
            ranges: q_only(3, 8),
            run: |s, _| wreath::quaternion_nonmembership_check(s),
        },
        CheckInfo {
            id: "telescope",
            title: "telescoping commutator",
            claim: "(b, A, A^2, ..., A^(N/2)) = (b, (N-1).A) and b b^A ... b^(A^(N-1)) = (b A^-1)^N A^N; the two agree up to b^2",
            method: "direct unit arithmetic; the b^2 factor is reported",
            ranges: q_only(3, 6),
            run: |s, _| wreath::telescope_identity_check(s),
        },
    ]
}

/// All checks, in the order the report lists them.
pub fn registry() -> &'static [CheckInfo] {
    use std::sync::OnceLock;
    static REGISTRY: OnceLock<Vec<CheckInfo>> = OnceLock::new();
    REGISTRY.get_or_init(registry_table)
}

pub fn find_check(id: &str) -> Result<&'static CheckInfo> {
    registry()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

/// Human-readable description of a check.
pub fn explain(id: &str) -> Result<String> {
    let c = find_check(id)?;
    let mut out = String::new();
    let _ = writeln!(out, "{}: {}", c.id, c.title);
    let _ = writeln!(out, "claim:  {}", c.claim);
    let _ = writeln!(out, "method: {}", c.method);
    let _ = write!(out, "range: ");
    for f in Family::ALL {
        match c.range(f) {
            Some((lo, hi)) => {
                let _ = write!(out, " {} n={}..{}", f.letter(), lo.max(f.min_n()), hi);
            }
            None => {
                let _ = write!(out, " {} -", f.letter());
            }
        }
    }
    out.push('\n');
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckSelection {
    All,
    List(Vec<String>),
}

impl FromStr for CheckSelection {
    type Err = Error;

    /// `all`, or a comma-separated list of ids; the empty string selects nothing.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "all" {
            return Ok(CheckSelection::All);
        }
        let ids: Vec<String> = s
            .split(',')
            .map(str::trim)
            .filter(|x| !x.is_empty())
            .map(String::from)
            .collect();
        for id in &ids {
            find_check(id)?;
        }
        Ok(CheckSelection::List(ids))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone)]
pub struct Campaign {
    pub families: Vec<Family>,
    pub n_min: u32,
    pub n_max: u32,
    pub checks: CheckSelection,
    pub seed: u64,
}

impl Campaign {
    fn selected(&self) -> Result<Vec<&'static CheckInfo>> {
        match &self.checks {
            CheckSelection::All => Ok(registry().iter().collect()),
            CheckSelection::List(ids) => ids.iter().map(|id| find_check(id)).collect(),
        }
    }

    fn validate(&self, checks: &[&CheckInfo]) -> Result<()> {
        if self.n_min < 3 || self.n_max > MAX_N || self.n_min > self.n_max {
            return Err(Error::UnsupportedRange {
                check: "campaign".into(),
                n: if self.n_min < 3 { self.n_min } else { self.n_max },
                min: 3,
                max: MAX_N,
            });
        }
        if self.checks == CheckSelection::All {
            return Ok(());
        }
        for c in checks {
            for &f in &self.families {
                let Some((lo, hi)) = c.range(f) else { continue };
                let lo = lo.max(f.min_n());
                let first = self.n_min.max(f.min_n());
                if let Some(n) = (first..=self.n_max).find(|n| *n < lo || *n > hi) {
                    return Err(Error::UnsupportedRange {
                        check: c.id.into(),
                        n,
                        min: lo,
                        max: hi,
                    });
                }
            }
        }
        Ok(())
    }
}

fn stream_id(check: usize, family: Family, n: u32) -> u64 {
    ((check as u64) << 16) | ((family_slot(family) as u64) << 8) | n as u64
}

/// Runs every selected check on every `(family, n)`. Entries come out ordered
/// by check, then family, then `n`; pairs outside a check's support are
/// recorded as skipped. Each pair draws from its own stream of the seeded
/// generator, so results do not depend on which other checks ran.
pub fn run_campaign(campaign: &Campaign) -> Result<VerificationReport> {
    let checks = campaign.selected()?;
    campaign.validate(&checks)?;
    let mut report = VerificationReport::new(campaign.seed);
    for c in checks {
        let pos = registry().iter().position(|r| r.id == c.id).expect("registered");
        for &family in &campaign.families {
            for n in campaign.n_min..=campaign.n_max {
                let start = Instant::now();
                let outcome = match (GroupSpec::new(family, n), c.range(family)) {
                    (Err(_), _) => Outcome::skipped(format!("no {family} group of order 2^{n}")),
                    (_, None) => Outcome::skipped(format!("does not apply to {family} groups")),
                    (Ok(_), Some((lo, hi))) if n < lo || n > hi => {
                        Outcome::skipped(format!("supported for n = {lo}..{hi}"))
                    }
                    (Ok(spec), Some(_)) => {
                        let mut rng = ChaCha8Rng::seed_from_u64(campaign.seed);
                        rng.set_stream(stream_id(pos, family, n));
                        c.run(spec, &mut rng)?
                    }
                };
                report.entries.push(Entry {
                    check_id: c.id.to_string(),
                    family,
                    n,
                    outcome,
                    elapsed: start.elapsed(),
                });
            }
        }
    }
    Ok(report)
}

/// Writes the report: JSON with a separate volatile header, or plain text.
pub fn write_report(report: &VerificationReport, path: &Path, format: Format) -> Result<()> {
    let body = match format {
        Format::Json => serde_json::to_string_pretty(&report.to_file())?,
        Format::Text => report.to_text(),
    };
    fs::write(path, body).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Index table `{family, n, t_L, t_upper, t_aug, cl_bound}` for every group in range.
pub fn index_table(families: &[Family], n_min: u32, n_max: u32) -> Result<Vec<lie::IndexRow>> {
    let mut rows = Vec::new();
    for &f in families {
        for n in n_min.max(f.min_n())..=n_max {
            rows.push(lie::index_row(GroupSpec::new(f, n)?));
        }
    }
    Ok(rows)
}
