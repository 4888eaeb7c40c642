//! Group identifiers and elements of representation rings.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::ser::{Error as _, SerializeMap};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    GL,
    Sp,
    SOodd,
    SOeven,
    O,
}

/// A classical group. `rank` is `N` for `GL_N` and `O_N`, and `n` for
/// `Sp_2n`, `SO_{2n+1}` and `SO_2n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GroupId {
    pub family: Family,
    pub rank: u32,
}

impl GroupId {
    pub fn new(family: Family, rank: u32) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidParameters("group rank must be at least 1".into()));
        }
        Ok(GroupId { family, rank })
    }

    pub fn gl(big_n: u32) -> Self {
        Self::new(Family::GL, big_n).expect("rank >= 1")
    }

    pub fn sp(n: u32) -> Self {
        Self::new(Family::Sp, n).expect("rank >= 1")
    }

    pub fn so_odd(n: u32) -> Self {
        Self::new(Family::SOodd, n).expect("rank >= 1")
    }

    pub fn so_even(n: u32) -> Self {
        Self::new(Family::SOeven, n).expect("rank >= 1")
    }

    pub fn o(big_n: u32) -> Self {
        Self::new(Family::O, big_n).expect("rank >= 1")
    }

    /// `SO_N`, picking the odd or even family from the parity of `N`.
    pub fn so(big_n: u32) -> Result<Self> {
        match big_n {
            0..=1 => Err(Error::InvalidParameters(format!("SO_{big_n} has no characters here; need N >= 2"))),
            _ if big_n % 2 == 1 => Self::new(Family::SOodd, (big_n - 1) / 2),
            _ => Self::new(Family::SOeven, big_n / 2),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.family != Family::O
    }

    /// Number of torus variables `x_1, …` in characters.
    pub fn nvars(&self) -> usize {
        self.rank as usize
    }

    /// Dimension of the defining representation.
    pub fn defining_dim(&self) -> u32 {
        match self.family {
            Family::GL | Family::O => self.rank,
            Family::Sp | Family::SOeven => 2 * self.rank,
            Family::SOodd => 2 * self.rank + 1,
        }
    }

    /// Whether `label` indexes an irreducible (or basis) character.
    pub fn admits(&self, label: &Partition) -> bool {
        match self.family {
            Family::O => label.in_par_o(self.rank),
            _ => label.len() <= self.rank as usize,
        }
    }

    pub fn check_label(&self, label: &Partition) -> Result<()> {
        if self.admits(label) {
            Ok(())
        } else {
            Err(Error::LabelOutOfRange { label: label.clone(), group: self.to_string() })
        }
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::GL => write!(f, "GL_{}", self.rank),
            Family::Sp => write!(f, "Sp_{}", 2 * self.rank),
            Family::SOodd => write!(f, "SO_{}", 2 * self.rank + 1),
            Family::SOeven => write!(f, "SO_{}", 2 * self.rank),
            Family::O => write!(f, "O_{}", self.rank),
        }
    }
}

/// An integer combination of irreducible (or basis) characters of a group.
#[derive(Clone, PartialEq, Eq)]
pub struct RepRingElement {
    group: GroupId,
    coeffs: BTreeMap<Partition, BigInt>,
}

impl RepRingElement {
    pub fn zero(group: GroupId) -> Self {
        RepRingElement { group, coeffs: BTreeMap::new() }
    }

    /// The single basis element `label`.
    pub fn basis(group: GroupId, label: Partition) -> Result<Self> {
        let mut out = Self::zero(group);
        out.add_term(label, BigInt::from(1))?;
        Ok(out)
    }

    pub fn group(&self) -> GroupId {
        self.group
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, label: &Partition) -> BigInt {
        self.coeffs.get(label).cloned().unwrap_or_default()
    }

    /// Adds `c · label`, rejecting labels outside the group's range.
    pub fn add_term(&mut self, label: Partition, c: impl Into<BigInt>) -> Result<()> {
        self.group.check_label(&label)?;
        let c = c.into();
        if c.is_zero() {
            return Ok(());
        }
        let slot = self.coeffs.entry(label.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&label);
        }
        Ok(())
    }

    pub fn add(&mut self, other: &RepRingElement) -> Result<()> {
        if self.group != other.group {
            return Err(Error::InvalidParameters(format!("cannot add {} and {} elements", self.group, other.group)));
        }
        for (label, c) in &other.coeffs {
            self.add_term(label.clone(), c.clone())?;
        }
        Ok(())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let coeffs = if c.is_zero() {
            BTreeMap::new()
        } else {
            self.coeffs.iter().map(|(l, v)| (l.clone(), v * c)).collect()
        };
        RepRingElement { group: self.group, coeffs }
    }

    /// Terms ordered by size, then reverse-lexicographically.
    pub fn terms(&self) -> Vec<(&Partition, &BigInt)> {
        let mut v: Vec<_> = self.coeffs.iter().collect();
        v.sort_by(|a, b| a.0.size().cmp(&b.0.size()).then_with(|| b.0.cmp(a.0)));
        v
    }

    pub fn labels(&self) -> impl Iterator<Item = &Partition> {
        self.coeffs.keys()
    }
}

impl fmt::Display for RepRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (label, c)) in self.terms().into_iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{label}: {c}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for RepRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {self}", self.group)
    }
}

// JSON form: {"group": {...}, "terms": [{"label": [3,1], "coeff": 2}, ...]}
#[derive(Serialize, Deserialize)]
struct Wire {
    group: GroupId,
    terms: Vec<WireTerm>,
}

#[derive(Serialize, Deserialize)]
struct WireTerm {
    label: Partition,
    coeff: i64,
}

impl Serialize for RepRingElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .terms()
            .into_iter()
            .map(|(l, c)| {
                c.to_i64()
                    .map(|coeff| WireTerm { label: l.clone(), coeff })
                    .ok_or_else(|| S::Error::custom("coefficient does not fit in 64 bits"))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("group", &self.group)?;
        map.serialize_entry("terms", &terms)?;
        map.end()
    }
}

impl<'de> Deserialize<'de> for RepRingElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = Wire::deserialize(deserializer)?;
        let mut out = RepRingElement::zero(wire.group);
        for t in wire.terms {
            out.add_term(t.label, t.coeff).map_err(serde::de::Error::custom)?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn names() {
        assert_eq!(GroupId::sp(2).to_string(), "Sp_4");
        assert_eq!(GroupId::so(5).unwrap(), GroupId::so_odd(2));
        assert_eq!(GroupId::so(4).unwrap(), GroupId::so_even(2));
        assert!(GroupId::so(1).is_err());
        assert!(GroupId::new(Family::Sp, 0).is_err());
    }

    #[test]
    fn labels_are_checked() {
        let mut e = RepRingElement::zero(GroupId::sp(1));
        assert!(e.add_term(p("[1,1]"), 1).is_err());
        e.add_term(p("[3]"), 1).unwrap();
        e.add_term(p("[1]"), 2).unwrap();
        e.add_term(p("[1]"), -2).unwrap();
        assert_eq!(e.to_string(), "{[3]: 1}");
        let mut o = RepRingElement::zero(GroupId::o(2));
        assert!(o.add_term(p("[2,2]"), 1).is_err());
        o.add_term(p("[1,1]"), 1).unwrap();
    }

    #[test]
    fn json_round_trip() {
        let mut e = RepRingElement::zero(GroupId::so_even(2));
        e.add_term(p("[2,1]"), 2).unwrap();
        e.add_term(p("[]"), -1).unwrap();
        let json = serde_json::to_string(&e).unwrap();
        assert_eq!(
            json,
            r#"{"group":{"family":"SOeven","rank":2},"terms":[{"label":[],"coeff":-1},{"label":[2,1],"coeff":2}]}"#
        );
        let back: RepRingElement = serde_json::from_str(&json).unwrap();
        assert_eq!(back, e);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }
}
