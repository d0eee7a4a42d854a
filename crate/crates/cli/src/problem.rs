//! Problem descriptions: the on-disk format (TOML by hand, JSON for
//! machines) and its resolution into live objects.  Exactly one input form
//! may be present: a single group with an optional sandwich, a list of
//! `[[part]]` tables for a union, or `raw_triples` for direct
//! classification.

use std::path::Path;

use serde::{Deserialize, Serialize};

use munnlab_core::{Error, FiniteGroup, Result, TripleSet};

/// Raw deserialized problem file.
#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupSpec>,
    /// Sandwich grid of entry tokens: "0", "e", or "gN" with N an element
    /// index (row-major, P rows of Q tokens).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sandwich: Option<Vec<Vec<String>>>,
    #[serde(default, rename = "part", skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<PartSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub raw_triples: Option<Vec<[usize; 3]>>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    #[serde(default, rename = "char", skip_serializing_if = "Option::is_none")]
    pub characteristic: Option<u64>,
    /// "explicit" (default when char is given), "auto", or "split".
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<String>,
    /// Cayley table over element indices 0..n, identity first.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct PartSpec {
    pub group: GroupSpec,
    pub sandwich: Vec<Vec<String>>,
}

/// How the ground characteristic is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldMode {
    Explicit(u64),
    Auto,
    Split,
}

impl FieldMode {
    pub fn label(&self) -> &'static str {
        match self {
            FieldMode::Explicit(_) => "explicit",
            FieldMode::Auto => "auto",
            FieldMode::Split => "split",
        }
    }

    /// The characteristic for the given groups: explicit as given, auto the
    /// smallest prime dividing no group order, split the smallest prime
    /// that additionally is ≡ 1 mod every element order.
    pub fn resolve_char(&self, groups: &[FiniteGroup]) -> u64 {
        match *self {
            FieldMode::Explicit(p) => p,
            FieldMode::Auto => primes()
                .find(|&p| groups.iter().all(|g| g.order() as u64 % p != 0))
                .unwrap(),
            FieldMode::Split => {
                let e = groups
                    .iter()
                    .fold(1u64, |acc, g| lcm(acc, g.exponent() as u64));
                primes()
                    .find(|&p| p % e == 1 && groups.iter().all(|g| g.order() as u64 % p != 0))
                    .unwrap()
            }
        }
    }
}

fn primes() -> impl Iterator<Item = u64> {
    (2u64..).filter(|&n| n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

fn lcm(a: u64, b: u64) -> u64 {
    let gcd = |mut x: u64, mut y: u64| {
        while y != 0 {
            (x, y) = (y, x % y);
        }
        x
    };
    a / gcd(a, b) * b
}

/// A validated problem: the input form plus the field policy.
#[derive(Clone, Debug)]
pub struct Problem {
    pub kind: ProblemKind,
    pub mode: FieldMode,
}

#[derive(Clone, Debug)]
pub enum ProblemKind {
    Single {
        group: FiniteGroup,
        sandwich: Option<Vec<Vec<Option<usize>>>>,
    },
    Union {
        parts: Vec<(FiniteGroup, Vec<Vec<Option<usize>>>)>,
    },
    Raw {
        triples: TripleSet,
    },
}

impl Problem {
    /// Every group the problem mentions (empty for raw triples).
    pub fn groups(&self) -> Vec<&FiniteGroup> {
        match &self.kind {
            ProblemKind::Single { group, .. } => vec![group],
            ProblemKind::Union { parts } => parts.iter().map(|(g, _)| g).collect(),
            ProblemKind::Raw { .. } => Vec::new(),
        }
    }

    pub fn characteristic(&self) -> u64 {
        let groups: Vec<FiniteGroup> = self.groups().into_iter().cloned().collect();
        self.mode.resolve_char(&groups)
    }
}

/// Read and deserialize a problem file; the extension picks the format
/// (`.json` for JSON, anything else is TOML).
pub fn load(path: &Path) -> Result<ProblemSpec> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    if path.extension().is_some_and(|x| x == "json") {
        serde_json::from_str(&text)
            .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
    } else {
        toml::from_str(&text).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
    }
}

/// Validate the raw spec against command-line overrides and build the
/// problem.  `char_override`/`split_override` mirror `--char` and `--split`.
pub fn resolve(
    spec: &ProblemSpec,
    char_override: Option<u64>,
    split_override: bool,
) -> Result<Problem> {
    let mode = resolve_mode(spec.field.as_ref(), char_override, split_override)?;
    let forms = usize::from(spec.group.is_some())
        + usize::from(!spec.parts.is_empty())
        + usize::from(spec.raw_triples.is_some());
    if forms != 1 {
        return Err(Error::InvalidInput(
            "exactly one of group, part tables, or raw_triples must be present".into(),
        ));
    }
    if spec.sandwich.is_some() && spec.group.is_none() {
        return Err(Error::InvalidInput(
            "a sandwich grid needs a group to draw entries from".into(),
        ));
    }
    let kind = if let Some(gs) = &spec.group {
        let group = build_group(gs)?;
        let sandwich = spec
            .sandwich
            .as_ref()
            .map(|grid| parse_sandwich(grid, &group))
            .transpose()?;
        ProblemKind::Single { group, sandwich }
    } else if !spec.parts.is_empty() {
        let parts = spec
            .parts
            .iter()
            .map(|p| {
                let group = build_group(&p.group)?;
                let sandwich = parse_sandwich(&p.sandwich, &group)?;
                Ok((group, sandwich))
            })
            .collect::<Result<Vec<_>>>()?;
        ProblemKind::Union { parts }
    } else {
        let raw = spec.raw_triples.as_ref().unwrap();
        let triples: Vec<(usize, usize, usize)> = raw.iter().map(|t| (t[0], t[1], t[2])).collect();
        ProblemKind::Raw {
            triples: TripleSet::from_raw(&triples)?,
        }
    };
    Ok(Problem { kind, mode })
}

fn resolve_mode(
    field: Option<&FieldSpec>,
    char_override: Option<u64>,
    split_override: bool,
) -> Result<FieldMode> {
    if char_override.is_some() && split_override {
        return Err(Error::InvalidInput(
            "--char and --split are mutually exclusive".into(),
        ));
    }
    if let Some(p) = char_override {
        check_prime(p)?;
        return Ok(FieldMode::Explicit(p));
    }
    if split_override {
        return Ok(FieldMode::Split);
    }
    let Some(f) = field else {
        return Ok(FieldMode::Auto);
    };
    match (f.mode.as_deref(), f.characteristic) {
        (Some("explicit") | None, Some(p)) => {
            check_prime(p)?;
            Ok(FieldMode::Explicit(p))
        }
        (Some("explicit"), None) => Err(Error::InvalidInput(
            "field.mode = \"explicit\" needs field.char".into(),
        )),
        (Some("auto"), None) | (None, None) => Ok(FieldMode::Auto),
        (Some("split"), None) => Ok(FieldMode::Split),
        (Some("auto" | "split"), Some(_)) => Err(Error::InvalidInput(
            "field.char contradicts a non-explicit field.mode".into(),
        )),
        (Some(other), _) => Err(Error::InvalidInput(format!(
            "unknown field.mode '{other}' (use explicit, auto, or split)"
        ))),
    }
}

fn check_prime(p: u64) -> Result<()> {
    if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
        return Err(Error::InvalidInput(format!(
            "characteristic {p} is not prime"
        )));
    }
    Ok(())
}

fn build_group(gs: &GroupSpec) -> Result<FiniteGroup> {
    match (&gs.builtin, &gs.table) {
        (Some(spec), None) => FiniteGroup::builtin(spec),
        (None, Some(table)) => {
            FiniteGroup::from_table(table, gs.name.clone().unwrap_or_else(|| "custom".into()))
        }
        _ => Err(Error::InvalidInput(
            "a group needs exactly one of builtin or table".into(),
        )),
    }
}

/// "0" is the semigroup zero, "e" the identity, "gN" the element with
/// index N in the group's canonical element order (so "g0" is "e").
fn parse_token(token: &str, group: &FiniteGroup) -> Result<Option<usize>> {
    match token {
        "0" => Ok(None),
        "e" => Ok(Some(0)),
        _ => {
            let idx: usize = token
                .strip_prefix('g')
                .and_then(|n| n.parse().ok())
                .ok_or_else(|| {
                    Error::InvalidInput(format!(
                        "bad sandwich token '{token}' (use \"0\", \"e\", or \"gN\")"
                    ))
                })?;
            if idx >= group.order() {
                return Err(Error::InvalidInput(format!(
                    "token '{token}' is outside the group of order {}",
                    group.order()
                )));
            }
            Ok(Some(idx))
        }
    }
}

fn parse_sandwich(grid: &[Vec<String>], group: &FiniteGroup) -> Result<Vec<Vec<Option<usize>>>> {
    grid.iter()
        .map(|row| row.iter().map(|t| parse_token(t, group)).collect())
        .collect()
}
