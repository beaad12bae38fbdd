//! Evaluates a finite norm table against older notions of "normed semigroup".
//!
//! Only axioms that quantify over the finite carrier are decided. Axioms about
//! infinite generator systems or a scalar action are reported as
//! [`AxiomStatus::NotFinitelyCheckable`].

use num::{One, Zero};
use serde::Serialize;

use crate::norms::{NormError, NormTable};
use crate::rational::{int, Rat};
use crate::semigroup::FiniteSemigroup;

/// How the semigroup operation is read. This fixes what "0" means: the
/// identity in additive notation, the two-sided zero in multiplicative notation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Notation {
    Multiplicative,
    Additive,
}

impl std::str::FromStr for Notation {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "multiplicative" | "mul" => Ok(Notation::Multiplicative),
            "additive" | "add" => Ok(Notation::Additive),
            _ => Err(format!("unknown notation `{s}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomWitness {
    pub elements: Vec<usize>,
    #[serde(with = "crate::rational::serde_rat_vec")]
    pub values: Vec<Rat>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiplier: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum AxiomStatus {
    Holds,
    Fails { witness: AxiomWitness },
    NotFinitelyCheckable,
    Inapplicable { reason: String },
    Ambiguous,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomVerdict {
    pub axiom: &'static str,
    pub statement: &'static str,
    #[serde(flatten)]
    pub status: AxiomStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DefinitionReport {
    pub definition: &'static str,
    pub axioms: Vec<AxiomVerdict>,
}

impl DefinitionReport {
    pub fn axiom(&self, name: &str) -> Option<&AxiomStatus> {
        self.axioms.iter().find(|a| a.axiom == name).map(|a| &a.status)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub notation: Notation,
    pub definitions: Vec<DefinitionReport>,
}

impl AxiomReport {
    pub fn definition(&self, name: &str) -> Option<&DefinitionReport> {
        self.definitions.iter().find(|d| d.definition == name)
    }

    pub fn status(&self, definition: &str, axiom: &str) -> Option<&AxiomStatus> {
        self.definition(definition)?.axiom(axiom)
    }
}

pub const DEFAULT_HOMOGENEITY_BOUND: usize = 8;

struct Ctx<'a> {
    s: &'a FiniteSemigroup,
    nu: &'a NormTable,
}

impl Ctx<'_> {
    fn witness(&self, elements: Vec<usize>, multiplier: Option<usize>) -> AxiomStatus {
        let values = elements.iter().map(|&x| self.nu[x].clone()).collect();
        AxiomStatus::Fails {
            witness: AxiomWitness {
                elements,
                values,
                multiplier,
            },
        }
    }

    /// First pair `(a, b)` breaking `rel(ν(ab), ν(a), ν(b))`.
    fn pairwise(&self, rel: impl Fn(&Rat, &Rat, &Rat) -> bool) -> AxiomStatus {
        for a in self.s.elements() {
            for b in self.s.elements() {
                let ab = self.s.mul(a, b);
                if !rel(&self.nu[ab], &self.nu[a], &self.nu[b]) {
                    return self.witness(vec![a, b, ab], None);
                }
            }
        }
        AxiomStatus::Holds
    }

    fn multiplicative(&self) -> AxiomStatus {
        self.pairwise(|ab, a, b| *ab == a * b)
    }

    fn subadditive(&self) -> AxiomStatus {
        self.pairwise(|ab, a, b| *ab <= a + b)
    }

    fn at_identity(&self, expected: Rat) -> AxiomStatus {
        match self.s.identity() {
            None => AxiomStatus::Inapplicable {
                reason: "semigroup has no identity".into(),
            },
            Some(e) if self.nu[e] == expected => AxiomStatus::Holds,
            Some(e) => self.witness(vec![e], None),
        }
    }
}

fn nfc(axiom: &'static str, statement: &'static str) -> AxiomVerdict {
    AxiomVerdict {
        axiom,
        statement,
        status: AxiomStatus::NotFinitelyCheckable,
    }
}

fn verdict(axiom: &'static str, statement: &'static str, status: AxiomStatus) -> AxiomVerdict {
    AxiomVerdict {
        axiom,
        statement,
        status,
    }
}

pub fn classify_literature_axioms(
    s: &FiniteSemigroup,
    nu: &NormTable,
    notation: Notation,
) -> Result<AxiomReport, NormError> {
    classify_with_bound(s, nu, notation, DEFAULT_HOMOGENEITY_BOUND)
}

/// As [`classify_literature_axioms`], checking `|na| = n|a|` for `n = 1..=homogeneity_bound`.
pub fn classify_with_bound(
    s: &FiniteSemigroup,
    nu: &NormTable,
    notation: Notation,
    homogeneity_bound: usize,
) -> Result<AxiomReport, NormError> {
    nu.matches(s)?;
    let ctx = Ctx { s, nu };

    let wegmann = DefinitionReport {
        definition: "wegmann",
        axioms: vec![
            verdict("multiplicative", "|nm| = |n||m|", ctx.multiplicative()),
            nfc("generators_exceed_one", "|p_i| > 1 for every generator"),
            nfc("generators_unbounded", "|p_i| -> infinity"),
        ],
    };

    let positive = match s.elements().find(|&a| nu[a].is_zero()) {
        Some(a) => ctx.witness(vec![a], None),
        None => AxiomStatus::Holds,
    };
    let kryzius = DefinitionReport {
        definition: "kryzius",
        axioms: vec![
            verdict("positive", "N(a) > 0", positive),
            verdict("multiplicative", "N(ab) = N(a)N(b)", ctx.multiplicative()),
            verdict("identity_is_one", "N(e) = 1", ctx.at_identity(Rat::one())),
            nfc("finite_sublevel_sets", "{a : N(a) <= y} is finite for every real y"),
        ],
    };

    let dikran = DefinitionReport {
        definition: "dikran",
        axioms: vec![
            verdict("subadditive", "v(xy) <= v(x) + v(y)", ctx.subadditive()),
            verdict("monoid_identity_zero", "v(1) = 0", ctx.at_identity(Rat::zero())),
        ],
    };

    let pavlov = DefinitionReport {
        definition: "pavlov",
        axioms: vec![
            nfc("subadditive", "||a + b|| <= ||a|| + ||b|| on a C-module"),
            nfc("homogeneous", "||la|| = |l| ||a|| for complex l"),
            nfc("definite", "||a|| = 0 iff a = 0"),
        ],
    };

    let mut homogeneous = AxiomStatus::Holds;
    'outer: for a in s.elements() {
        for n in 1..=homogeneity_bound {
            if nu[s.power(a, n)] != int(n as i64) * &nu[a] {
                homogeneous = ctx.witness(vec![a, s.power(a, n)], Some(n));
                break 'outer;
            }
        }
    }
    let shkarin = DefinitionReport {
        definition: "shkarin",
        axioms: vec![
            verdict("homogeneous", "|na| = n|a|", homogeneous),
            verdict("subadditive", "|a + b| <= |a| + |b|", ctx.subadditive()),
        ],
    };

    let neutral = match notation {
        Notation::Additive => s.identity(),
        Notation::Multiplicative => s.zero_elements().two_sided.first(),
    };
    let zero_iff_neutral = match neutral {
        None => AxiomStatus::Inapplicable {
            reason: match notation {
                Notation::Additive => "semigroup has no identity".into(),
                Notation::Multiplicative => "semigroup has no zero element".into(),
            },
        },
        Some(z) => match s.elements().find(|&x| nu[x].is_zero() != (x == z)) {
            Some(x) => ctx.witness(vec![x, z], None),
            None => AxiomStatus::Holds,
        },
    };
    let valero = DefinitionReport {
        definition: "valero",
        axioms: vec![
            verdict(
                "a_negation",
                "x = 0 iff there is -x with q(x) = q(-x) = 0",
                AxiomStatus::Ambiguous,
            ),
            verdict("b_subadditive", "q(x + y) <= q(x) + q(y)", ctx.subadditive()),
            verdict("c_zero_iff_neutral", "q(x) = 0 iff x = 0", zero_iff_neutral),
        ],
    };

    Ok(AxiomReport {
        notation,
        definitions: vec![wegmann, kryzius, dikran, pavlov, shkarin, valero],
    })
}
