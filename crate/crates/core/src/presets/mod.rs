//! Constructors for the example algebras, their expected invariants, and
//! the JSON file format.

mod groups;
mod json;
mod pointed;

use std::fmt;
use std::path::Path;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::Hopf;

pub use groups::{dual_group_algebra, group_algebra, FiniteGroup};
pub use json::{
    hopf_from_json, hopf_from_json_unchecked, hopf_to_json, hopf_to_json_string, scalar_from_json,
    scalar_to_json, tensor_from_json, tensor_to_json,
};
pub(crate) use json::parse_json;
pub use pointed::{sweedler, taft, uq_borel, uq_sl2};

/// Which algebra a preset builds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PresetKind {
    Trivial,
    GroupAlgebra(FiniteGroup),
    DualGroupAlgebra(FiniteGroup),
    Sweedler,
    Taft(usize),
    UqBorel(usize),
    UqSl2(usize),
    Tensor(Box<PresetDescriptor>, Box<PresetDescriptor>),
}

/// A preset: what to build, under which CLI name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresetDescriptor {
    pub kind: PresetKind,
    /// Source of a group given as a table file (kept for the name).
    source: Option<String>,
}

/// Invariants known in advance for a preset. `None` means "not asserted".
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExpectedInvariants {
    pub qexp: Option<u64>,
    /// `Some(None)` for an infinite exponent.
    pub exponent: Option<Option<u64>>,
    pub s2_order: Option<u64>,
    pub group_exponent: Option<u64>,
}

impl PresetDescriptor {
    pub fn new(kind: PresetKind) -> Self {
        Self { kind, source: None }
    }

    /// Parse a CLI preset name: `trivial`, `group:<file|builtin:NAME>`,
    /// `dualgroup:<…>`, `sweedler`, `taft:<n>`, `uqb2:<p>`, `uqsl2:<p>`,
    /// `tensor:<a>,<b>` (split at the first comma).
    pub fn parse(name: &str) -> Result<Self> {
        let bad = || Error::InvalidParameters(format!("unknown preset {name:?}"));
        let int = |s: &str| -> Result<usize> {
            s.parse()
                .map_err(|_| Error::InvalidParameters(format!("{name:?}: {s:?} is not a positive integer")))
        };
        let (head, arg) = match name.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (name, None),
        };
        let kind = match (head, arg) {
            ("trivial", None) => PresetKind::Trivial,
            ("sweedler", None) => PresetKind::Sweedler,
            ("taft", Some(n)) => PresetKind::Taft(int(n)?),
            ("uqb2", Some(p)) => PresetKind::UqBorel(int(p)?),
            ("uqsl2", Some(p)) => PresetKind::UqSl2(int(p)?),
            ("group", Some(src)) | ("dualgroup", Some(src)) => {
                let (group, source) = load_group(src)?;
                let kind = if head == "group" {
                    PresetKind::GroupAlgebra(group)
                } else {
                    PresetKind::DualGroupAlgebra(group)
                };
                return Ok(Self { kind, source });
            }
            ("tensor", Some(pair)) => {
                let (a, b) = pair.split_once(',').ok_or_else(bad)?;
                PresetKind::Tensor(Box::new(Self::parse(a)?), Box::new(Self::parse(b)?))
            }
            _ => return Err(bad()),
        };
        Ok(Self::new(kind))
    }

    /// The name [`PresetDescriptor::parse`] accepts for this preset.
    pub fn name(&self) -> String {
        let group_src = |g: &FiniteGroup| match &self.source {
            Some(s) => s.clone(),
            None => format!("builtin:{}", g.name()),
        };
        match &self.kind {
            PresetKind::Trivial => "trivial".into(),
            PresetKind::GroupAlgebra(g) => format!("group:{}", group_src(g)),
            PresetKind::DualGroupAlgebra(g) => format!("dualgroup:{}", group_src(g)),
            PresetKind::Sweedler => "sweedler".into(),
            PresetKind::Taft(n) => format!("taft:{n}"),
            PresetKind::UqBorel(p) => format!("uqb2:{p}"),
            PresetKind::UqSl2(p) => format!("uqsl2:{p}"),
            PresetKind::Tensor(a, b) => format!("tensor:{},{}", a.name(), b.name()),
        }
    }

    pub fn build(&self) -> Result<Hopf> {
        let h = match &self.kind {
            PresetKind::Trivial => Hopf::trivial(),
            PresetKind::GroupAlgebra(g) => group_algebra(g),
            PresetKind::DualGroupAlgebra(g) => dual_group_algebra(g),
            PresetKind::Sweedler => sweedler(),
            PresetKind::Taft(n) => taft(*n)?,
            PresetKind::UqBorel(p) => uq_borel(*p)?,
            PresetKind::UqSl2(p) => uq_sl2(*p)?,
            PresetKind::Tensor(a, b) => a.build()?.tensor_lifted(&b.build()?)?,
        };
        Ok(h)
    }

    /// Dimension without building the algebra.
    pub fn dim(&self) -> usize {
        match &self.kind {
            PresetKind::Trivial => 1,
            PresetKind::GroupAlgebra(g) | PresetKind::DualGroupAlgebra(g) => g.order(),
            PresetKind::Sweedler => 4,
            PresetKind::Taft(n) | PresetKind::UqBorel(n) => n * n,
            PresetKind::UqSl2(p) => p * p * p,
            PresetKind::Tensor(a, b) => a.dim() * b.dim(),
        }
    }

    /// Whether all simple comodules are one-dimensional, i.e. the declared
    /// grouplikes span the coradical.
    pub fn is_pointed(&self) -> bool {
        match &self.kind {
            PresetKind::DualGroupAlgebra(g) => g.is_abelian(),
            PresetKind::Tensor(a, b) => a.is_pointed() && b.is_pointed(),
            _ => true,
        }
    }

    pub fn expected(&self) -> ExpectedInvariants {
        match &self.kind {
            PresetKind::Trivial => ExpectedInvariants {
                qexp: Some(1),
                exponent: Some(Some(1)),
                s2_order: Some(1),
                group_exponent: Some(1),
            },
            PresetKind::GroupAlgebra(g) => {
                let e = g.exponent();
                ExpectedInvariants {
                    qexp: Some(e),
                    exponent: Some(Some(e)),
                    s2_order: Some(1),
                    group_exponent: Some(e),
                }
            }
            PresetKind::DualGroupAlgebra(g) => {
                let e = g.exponent();
                ExpectedInvariants {
                    qexp: Some(e),
                    exponent: Some(Some(e)),
                    s2_order: Some(1),
                    group_exponent: g.is_abelian().then_some(e),
                }
            }
            PresetKind::Sweedler => ExpectedInvariants {
                qexp: Some(2),
                exponent: Some(None),
                s2_order: Some(2),
                group_exponent: Some(2),
            },
            PresetKind::Taft(n) | PresetKind::UqBorel(n) => ExpectedInvariants {
                qexp: Some(*n as u64),
                exponent: None,
                s2_order: Some(*n as u64),
                group_exponent: Some(*n as u64),
            },
            PresetKind::UqSl2(p) => ExpectedInvariants {
                qexp: Some(*p as u64),
                exponent: None,
                s2_order: None,
                group_exponent: Some(*p as u64),
            },
            PresetKind::Tensor(a, b) => {
                let (ea, eb) = (a.expected(), b.expected());
                let lcm = |x: Option<u64>, y: Option<u64>| Some(x?.lcm(&y?));
                ExpectedInvariants {
                    qexp: lcm(ea.qexp, eb.qexp),
                    exponent: None,
                    s2_order: lcm(ea.s2_order, eb.s2_order),
                    group_exponent: lcm(ea.group_exponent, eb.group_exponent),
                }
            }
        }
    }
}

impl fmt::Display for PresetDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn load_group(src: &str) -> Result<(FiniteGroup, Option<String>)> {
    if let Some(b) = src.strip_prefix("builtin:") {
        return Ok((FiniteGroup::builtin(b)?, None));
    }
    let path = Path::new(src);
    let text = std::fs::read_to_string(path)?;
    let stem = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("G")
        .to_string();
    Ok((FiniteGroup::from_json(&text, &stem)?, Some(src.to_string())))
}

/// The preset zoo used by tests and the suite, in a fixed order.
pub fn zoo() -> Vec<PresetDescriptor> {
    [
        "trivial",
        "group:builtin:Z2",
        "group:builtin:Z3",
        "group:builtin:Z4",
        "group:builtin:Z6",
        "group:builtin:Z2xZ2",
        "group:builtin:S3",
        "dualgroup:builtin:Z2",
        "dualgroup:builtin:Z3",
        "dualgroup:builtin:S3",
        "sweedler",
        "taft:3",
        "taft:4",
        "taft:5",
        "uqb2:3",
        "uqsl2:3",
        "tensor:sweedler,group:builtin:Z3",
    ]
    .iter()
    .map(|n| PresetDescriptor::parse(n).expect("zoo names parse"))
    .collect()
}
