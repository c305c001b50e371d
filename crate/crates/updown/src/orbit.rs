//! Orbit invariants and membership tests.
//!
//! The trace (component sum) is conserved by every word. Classical words
//! additionally conserve the number of type-I components, where component
//! `x_i` is type I when exactly one of the 1-based position `i` and the
//! value `x_i` is odd. These two invariants are complete for classical
//! orbits; the trace alone is complete for virtual orbits. Restricting to
//! irreducible diagrams changes nothing except for classical diagrams on
//! two strands, where the reachable set collapses to at most three tuples.

use std::fmt;
use std::str::FromStr;

use crate::action::ColorVector;
use crate::{Error, Result};

/// Component sum; invariant under the action of every word.
pub fn trace(x: &ColorVector) -> i64 {
    x.iter().sum()
}

/// Whether the component at 0-based position `pos` is type I: exactly one
/// of the 1-based position and the value is odd.
pub(crate) fn is_type_one(pos: usize, value: i64) -> bool {
    (pos as i64 + value) & 1 == 0
}

/// Number of type-I components; invariant under classical words.
pub fn count_type_one(x: &ColorVector) -> usize {
    x.iter().enumerate().filter(|&(i, &v)| is_type_one(i, v)).count()
}

/// Number of type-II components; the complement of the type-I count.
pub fn count_type_two(x: &ColorVector) -> usize {
    x.len() - count_type_one(x)
}

/// The complete classical-orbit invariant tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitInvariants {
    pub trace: i64,
    pub type_one: usize,
    pub type_two: usize,
}

pub fn orbit_invariants(x: &ColorVector) -> OrbitInvariants {
    let type_one = count_type_one(x);
    OrbitInvariants { trace: trace(x), type_one, type_two: x.len() - type_one }
}

/// Which crossing alphabet generates the acting monoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum World {
    Classical,
    Virtual,
}

impl FromStr for World {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "classical" => Ok(World::Classical),
            "virtual" => Ok(World::Virtual),
            other => Err(Error::InvalidArgument(format!("unknown world `{other}`"))),
        }
    }
}

/// A family of diagrams: crossing alphabet, optionally restricted to pure
/// diagrams (identity permutation) and/or irreducible diagrams (no
/// non-alternating bigons).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitFlavor {
    pub world: World,
    pub pure: bool,
    pub irreducible: bool,
}

impl OrbitFlavor {
    pub fn classical() -> Self {
        Self { world: World::Classical, pure: false, irreducible: false }
    }

    pub fn virtual_diagrams() -> Self {
        Self { world: World::Virtual, pure: false, irreducible: false }
    }

    pub fn pure(mut self) -> Self {
        self.pure = true;
        self
    }

    pub fn irreducible(mut self) -> Self {
        self.irreducible = true;
        self
    }
}

impl fmt::Display for OrbitFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.world {
            World::Classical => write!(f, "classical")?,
            World::Virtual => write!(f, "virtual")?,
        }
        if self.pure {
            write!(f, "-pure")?;
        }
        if self.irreducible {
            write!(f, "-irreducible")?;
        }
        Ok(())
    }
}

impl FromStr for OrbitFlavor {
    type Err = Error;

    /// Accepts `classical`, `virtual`, optionally suffixed by `-pure`
    /// and/or `-irreducible` in either order.
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split('-');
        let world: World = parts
            .next()
            .ok_or_else(|| Error::InvalidArgument(format!("unknown flavor `{s}`")))?
            .parse()?;
        let mut flavor = OrbitFlavor { world, pure: false, irreducible: false };
        for part in parts {
            match part {
                "pure" if !flavor.pure => flavor.pure = true,
                "irreducible" if !flavor.irreducible => flavor.irreducible = true,
                _ => return Err(Error::InvalidArgument(format!("unknown flavor `{s}`"))),
            }
        }
        Ok(flavor)
    }
}

/// Outcome of a membership test, with the first failed invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Member,
    TraceMismatch,
    TypeOneMismatch,
    ParityMismatch,
    /// Trace and parity invariants hold, but on two strands irreducible
    /// classical diagrams reach only three tuples and the target is not
    /// one of them.
    OutsideDegreeTwoIrreducible,
}

impl Membership {
    pub fn is_member(self) -> bool {
        matches!(self, Membership::Member)
    }

    pub fn reason(self) -> &'static str {
        match self {
            Membership::Member => "ok",
            Membership::TraceMismatch => "trace mismatch",
            Membership::TypeOneMismatch => "type-I mismatch",
            Membership::ParityMismatch => "parity mismatch",
            Membership::OutsideDegreeTwoIrreducible => "degree-2 irreducible set",
        }
    }
}

/// Decides whether some diagram of the requested flavor carries `x` to
/// `y`, reporting the first violated invariant on failure.
pub fn membership(x: &ColorVector, y: &ColorVector, flavor: OrbitFlavor) -> Result<Membership> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch { len: y.len(), degree: x.len() });
    }
    let n = x.len();
    if n == 0 {
        return Err(Error::InvalidDegree);
    }
    if trace(x) != trace(y) {
        return Ok(Membership::TraceMismatch);
    }
    match flavor.world {
        World::Virtual => Ok(Membership::Member),
        World::Classical if flavor.pure => {
            if x.iter().zip(y.iter()).any(|(a, b)| (a - b) & 1 != 0) {
                return Ok(Membership::ParityMismatch);
            }
            if flavor.irreducible && n == 2 && x != y {
                return Ok(Membership::OutsideDegreeTwoIrreducible);
            }
            Ok(Membership::Member)
        }
        World::Classical => {
            if count_type_one(x) != count_type_one(y) {
                return Ok(Membership::TypeOneMismatch);
            }
            if flavor.irreducible && n == 2 {
                let reachable = y == x
                    || y.0 == [x[1] + 1, x[0] - 1]
                    || y.0 == [x[1] - 1, x[0] + 1];
                if !reachable {
                    return Ok(Membership::OutsideDegreeTwoIrreducible);
                }
            }
            Ok(Membership::Member)
        }
    }
}

/// Boolean form of [`membership`].
pub fn in_orbit(x: &ColorVector, y: &ColorVector, flavor: OrbitFlavor) -> Result<bool> {
    Ok(membership(x, y, flavor)?.is_member())
}
