//! Explicit left-compressed 3-graphs on `[t]` with `m = C(t,3) − a` edges,
//! described by the triples missing from them.
//!
//! Every family has the same shape: a small set `D` of missing triples that
//! avoid the pair `{t−1, t}`, plus the `a − |D|` colex-largest triples
//! `j(t−1)t`. `C_{3,m}` itself is the case `D = ∅`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::edge::{binomial, Edge};
use crate::error::{Error, Result};
use crate::graph::RGraph;
use crate::lagrangian::{lagrangian, SolverOptions};

/// The configuration families. External names (CLI and reports) are given by
/// [`Family::name`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// A run of `i` missing triples `j(t−2)t` ending at `(t−3)(t−2)t`;
    /// colex-first missing triple `(t−2−i)(t−2)t`.
    Run { i: u32, a: u32 },
    /// Contains `[t−1]^(3)`; colex-first missing triple `(t−4)(t−3)t`.
    Corner { a: u32 },
    /// Colex-first missing triple `(t−3)(t−2)(t−1)`, four edges away from `C_{3,m}`.
    TopPair { a: u32 },
    /// `a = 4` member of the previous shape.
    TopPairFour,
    /// Colex-first missing triple `(t−3)(t−2)(t−1)`, six edges away from `C_{3,m}`.
    TopTriple { a: u32 },
    /// `a = 6` member of the previous shape.
    TopTripleSix,
    /// Six small missing-set shapes (`k = 1..=6`) next to `C_{3,m}`.
    ProofCase { k: u8, a: u32 },
}

impl Family {
    pub fn name(&self) -> String {
        match self {
            Family::Run { .. } => "thm1.10".into(),
            Family::Corner { .. } => "lemma3.3".into(),
            Family::TopPair { .. } => "lemma3.4".into(),
            Family::TopPairFour => "lemma3.5".into(),
            Family::TopTriple { .. } => "lemma3.6".into(),
            Family::TopTripleSix => "lemma3.7".into(),
            Family::ProofCase { k, .. } => format!("case{k}"),
        }
    }

    /// Number of missing triples.
    pub fn a(&self) -> u32 {
        match *self {
            Family::Run { a, .. }
            | Family::Corner { a }
            | Family::TopPair { a }
            | Family::TopTriple { a }
            | Family::ProofCase { a, .. } => a,
            Family::TopPairFour => 4,
            Family::TopTripleSix => 6,
        }
    }

    /// Build from an external family name plus optional `i` and `a`.
    pub fn parse(name: &str, i: Option<u32>, a: Option<u32>) -> Result<Family> {
        let need = |v: Option<u32>, what: &str| {
            v.ok_or_else(|| Error::OutOfRange(format!("family {name} needs --{what}")))
        };
        let fam = match name {
            "thm1.10" => Family::Run {
                i: need(i, "i")?,
                a: need(a, "a")?,
            },
            "lemma3.3" => Family::Corner { a: need(a, "a")? },
            "lemma3.4" => Family::TopPair { a: need(a, "a")? },
            "lemma3.5" => Family::TopPairFour,
            "lemma3.6" => Family::TopTriple { a: need(a, "a")? },
            "lemma3.7" => Family::TopTripleSix,
            other => match other.strip_prefix("case").and_then(|k| u8::from_str(k).ok()) {
                Some(k @ 1..=6) => Family::ProofCase { k, a: need(a, "a")? },
                _ => {
                    return Err(Error::OutOfRange(format!(
                        "unknown family `{name}` (expected thm1.10, lemma3.3..lemma3.7, case1..case6)"
                    )))
                }
            },
        };
        Ok(fam)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Run { i, a } => write!(f, "thm1.10(i={i}, a={a})"),
            Family::Corner { a } | Family::TopPair { a } | Family::TopTriple { a } => {
                write!(f, "{}(a={a})", self.name())
            }
            Family::ProofCase { a, .. } => write!(f, "{}(a={a})", self.name()),
            Family::TopPairFour | Family::TopTripleSix => f.write_str(&self.name()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConfigurationSpec {
    pub t: u32,
    pub family: Family,
}

fn tri(a: u32, b: u32, c: u32) -> Edge {
    Edge::new(vec![a, b, c]).expect("increasing triple")
}

fn refuse(msg: String) -> Error {
    Error::OutOfRange(msg)
}

impl ConfigurationSpec {
    pub fn new(t: u32, family: Family) -> Self {
        ConfigurationSpec { t, family }
    }

    pub fn m(&self) -> u64 {
        binomial(self.t as u64, 3) - self.family.a() as u64
    }

    /// Check the family's parameter ranges; the error names the violated bound.
    pub fn validate(&self) -> Result<()> {
        let t = self.t;
        if t < 6 {
            return Err(refuse(format!("configurations need t >= 6, got t = {t}")));
        }
        let upper = |a: u32, who: &str, lo: u32| -> Result<()> {
            if a < lo || a + 2 > t {
                Err(refuse(format!("{who} requires {lo} ≤ a ≤ t−2 (t = {t}, a = {a})")))
            } else {
                Ok(())
            }
        };
        match self.family {
            Family::Run { i, a } => {
                upper(a, "thm1.10", 3)?;
                if i < 1 {
                    return Err(refuse("thm1.10 requires i ≥ 1".into()));
                }
                if a < 2 * i + 1 {
                    return Err(refuse(format!(
                        "thm1.10 requires a ≥ 2i+1 (left-compression), violated by i = {i}, a = {a}"
                    )));
                }
            }
            Family::Corner { a } => {
                upper(a, "lemma3.3", 3)?;
                if a < 6 {
                    return Err(refuse(format!(
                        "lemma3.3 configuration with colex-first missing triple (t−4)(t−3)t requires a ≥ 6 (a = {a}; smaller a is the thm1.10 family)"
                    )));
                }
            }
            Family::TopPair { a } => upper(a, "lemma3.4", 5)?,
            Family::TopPairFour => upper(4, "lemma3.5 (a = 4)", 4)?,
            Family::TopTriple { a } => upper(a, "lemma3.6", 7)?,
            Family::TopTripleSix => upper(6, "lemma3.7 (a = 6)", 6)?,
            Family::ProofCase { k, a } => {
                let lo = match k {
                    1 => 3,
                    2 => 5,
                    3 => 4,
                    4 => 7,
                    5 | 6 => 6,
                    _ => return Err(refuse(format!("case index must be 1..=6, got {k}"))),
                };
                upper(a, &format!("case{k}"), lo)?;
            }
        }
        Ok(())
    }

    /// The part of `G^c` that avoids the pair `{t−1, t}`.
    fn core_missing(&self) -> Vec<Edge> {
        let t = self.t;
        match self.family {
            Family::Run { i, .. } => (t - 2 - i..=t - 3).map(|j| tri(j, t - 2, t)).collect(),
            Family::Corner { .. } | Family::ProofCase { k: 5, .. } => vec![
                tri(t - 4, t - 3, t),
                tri(t - 4, t - 2, t),
                tri(t - 3, t - 2, t),
            ],
            Family::TopPair { .. } | Family::TopPairFour | Family::ProofCase { k: 3, .. } => {
                vec![tri(t - 3, t - 2, t - 1), tri(t - 3, t - 2, t)]
            }
            Family::TopTriple { .. } | Family::TopTripleSix | Family::ProofCase { k: 6, .. } => vec![
                tri(t - 3, t - 2, t - 1),
                tri(t - 4, t - 2, t),
                tri(t - 3, t - 2, t),
            ],
            Family::ProofCase { k: 1, .. } => vec![tri(t - 3, t - 2, t)],
            Family::ProofCase { k: 2, .. } => vec![tri(t - 4, t - 2, t), tri(t - 3, t - 2, t)],
            Family::ProofCase { k: 4, .. } => vec![
                tri(t - 5, t - 2, t),
                tri(t - 4, t - 2, t),
                tri(t - 3, t - 2, t),
            ],
            Family::ProofCase { .. } => unreachable!("validated"),
        }
    }

    /// `G^c` inside `[t]^(3)`, in colex order.
    pub fn complement_triples(&self) -> Result<Vec<Edge>> {
        self.validate()?;
        let t = self.t;
        let mut missing = self.core_missing();
        let a = self.family.a();
        let rest = a - missing.len() as u32;
        missing.extend((t - 1 - rest..=t - 2).map(|j| tri(j, t - 1, t)));
        missing.sort();
        Ok(missing)
    }

    /// The comparison graph `G'` sitting between `G` and `C_{3,m}`, where the
    /// family has one.
    pub fn companion(&self) -> Option<ConfigurationSpec> {
        let t = self.t;
        let fam = match self.family {
            Family::Corner { a } if a >= 7 => Family::Run { i: 3, a },
            Family::TopPair { a } => Family::Run { i: 2, a },
            Family::TopTriple { a } => Family::Run { i: 3, a },
            Family::TopTripleSix => Family::TopPair { a: 6 },
            _ => return None,
        };
        Some(ConfigurationSpec::new(t, fam))
    }
}

/// Construct the configuration's graph on `[t]` and audit it: it must be
/// left-compressed, have `C(t,3) − a` edges, and (for the `thm1.10` family)
/// have `(t−2−i)(t−2)t` as its colex-first missing triple.
pub fn build_configuration(spec: &ConfigurationSpec) -> Result<RGraph> {
    let t = spec.t;
    let missing = spec.complement_triples()?;
    let all = RGraph::complete(3, t);
    let g = RGraph::new(3, t, all.edges().iter().filter(|e| !missing.contains(e)).cloned())?;
    if g.m() as u64 != spec.m() || g.complement().edges() != missing.as_slice() {
        return Err(Error::OutOfRange(format!("{}: complement audit failed", spec.family)));
    }
    if !g.is_left_compressed() {
        return Err(Error::NotLeftCompressed);
    }
    if let Family::Run { i, .. } = spec.family {
        if missing.first() != Some(&tri(t - 2 - i, t - 2, t)) {
            return Err(Error::OutOfRange(format!(
                "{}: colex-first missing triple is {:?}",
                spec.family,
                missing.first()
            )));
        }
    }
    Ok(g)
}

/// The Lagrangian comparison for one configuration.
#[derive(Clone, Debug, Serialize)]
pub struct InequalityCheck {
    pub t: u32,
    pub family: String,
    pub m: u64,
    #[serde(serialize_with = "crate::report::sig17")]
    pub graph_value: f64,
    #[serde(serialize_with = "crate::report::sig17")]
    pub colex_value: f64,
    /// `λ(C_{3,m}) − λ(G)`.
    #[serde(serialize_with = "crate::report::sig17")]
    pub margin: f64,
    /// `λ(G')` and `λ(G') − λ(G)` when the family has a companion `G'`.
    #[serde(serialize_with = "sig17_pair")]
    pub companion: Option<(f64, f64)>,
    pub certified: bool,
    pub pass: bool,
}

fn sig17_pair<S: serde::Serializer>(v: &Option<(f64, f64)>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        None => s.serialize_none(),
        Some((value, margin)) => {
            #[derive(Serialize)]
            struct Pair {
                #[serde(serialize_with = "crate::report::sig17")]
                value: f64,
                #[serde(serialize_with = "crate::report::sig17")]
                margin: f64,
            }
            s.serialize_some(&Pair {
                value: *value,
                margin: *margin,
            })
        }
    }
}

/// Margin below which an inequality counts as violated.
pub const INEQUALITY_TOL: f64 = 1e-7;

/// Compare `λ(G)` with `λ(C_{3,m})` (and with `λ(G')` where defined).
/// `certified == false` marks the verdict as inconclusive.
pub fn check_theorem_inequality(spec: &ConfigurationSpec, opts: &SolverOptions) -> Result<InequalityCheck> {
    let g = build_configuration(spec)?;
    let colex = RGraph::colex(3, spec.m()).with_n(spec.t)?;
    let gv = lagrangian(&g, opts);
    let cv = lagrangian(&colex, opts);
    let mut certified = gv.certified && cv.certified;
    let margin = cv.value - gv.value;
    let mut pass = margin >= -INEQUALITY_TOL;
    let companion = match spec.companion() {
        Some(cspec) => {
            let cg = build_configuration(&cspec)?;
            let res = lagrangian(&cg, opts);
            certified &= res.certified;
            let to_g = res.value - gv.value;
            pass &= to_g >= -INEQUALITY_TOL && cv.value - res.value >= -INEQUALITY_TOL;
            Some((res.value, to_g))
        }
        None => None,
    };
    Ok(InequalityCheck {
        t: spec.t,
        family: spec.family.to_string(),
        m: spec.m(),
        graph_value: gv.value,
        colex_value: cv.value,
        margin,
        companion,
        certified,
        pass,
    })
}

/// Every in-range configuration at `t`, in a fixed order.
pub fn all_configurations(t: u32) -> Vec<ConfigurationSpec> {
    let mut fams = Vec::new();
    for a in 3..=t.saturating_sub(2) {
        for i in 1..=(a - 1) / 2 {
            fams.push(Family::Run { i, a });
        }
    }
    for a in 0..=t {
        fams.push(Family::Corner { a });
        fams.push(Family::TopPair { a });
        fams.push(Family::TopTriple { a });
    }
    fams.push(Family::TopPairFour);
    fams.push(Family::TopTripleSix);
    for k in 1..=6 {
        for a in 0..=t {
            fams.push(Family::ProofCase { k, a });
        }
    }
    fams.into_iter()
        .map(|f| ConfigurationSpec::new(t, f))
        .filter(|s| s.validate().is_ok())
        .collect()
}
