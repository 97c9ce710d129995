use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use super::snf::canonical_invariant_factors;

/// One degree of a finitely generated graded abelian group:
/// `Z^rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k` with `t_1 | t_2 | ... | t_k`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Summand {
    pub rank: u64,
    pub torsion: Vec<BigUint>,
}

impl Summand {
    pub fn free(rank: u64) -> Self {
        Summand {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn new(rank: u64, torsion: Vec<BigUint>) -> Self {
        Summand {
            rank,
            torsion: canonical_invariant_factors(torsion),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    fn direct_sum(&self, other: &Summand) -> Summand {
        let mut t = self.torsion.clone();
        t.extend(other.torsion.iter().cloned());
        Summand::new(self.rank + other.rank, t)
    }
}

impl Serialize for Summand {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Summand", 2)?;
        st.serialize_field("rank", &self.rank)?;
        let torsion: Vec<serde_json::Value> = self
            .torsion
            .iter()
            .map(|t| match u64::try_from(t) {
                Ok(x) => serde_json::Value::from(x),
                Err(_) => serde_json::Value::String(t.to_string()),
            })
            .collect();
        st.serialize_field("torsion", &torsion)?;
        st.end()
    }
}

/// Reduced homology data: only nonzero degrees are stored, so structural
/// equality is isomorphism of invariant-factor data.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedAbelianGroup {
    degrees: BTreeMap<u32, Summand>,
}

impl GradedAbelianGroup {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `H̃_*(S^d)`.
    pub fn sphere(d: u32) -> Self {
        let mut g = Self::zero();
        g.insert(d, Summand::free(1));
        g
    }

    pub fn from_summands<I: IntoIterator<Item = (u32, Summand)>>(parts: I) -> Self {
        let mut g = Self::zero();
        for (d, s) in parts {
            g.add_summand(d, s);
        }
        g
    }

    /// Sets degree `d`, replacing any previous value.
    pub fn insert(&mut self, d: u32, s: Summand) {
        if s.is_zero() {
            self.degrees.remove(&d);
        } else {
            self.degrees.insert(d, Summand::new(s.rank, s.torsion));
        }
    }

    /// Adds `s` to degree `d` as a direct summand.
    pub fn add_summand(&mut self, d: u32, s: Summand) {
        let merged = match self.degrees.get(&d) {
            Some(cur) => cur.direct_sum(&s),
            None => Summand::new(s.rank, s.torsion),
        };
        self.insert(d, merged);
    }

    pub fn is_zero(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn get(&self, d: u32) -> Option<&Summand> {
        self.degrees.get(&d)
    }

    pub fn rank(&self, d: u32) -> u64 {
        self.degrees.get(&d).map_or(0, |s| s.rank)
    }

    pub fn torsion(&self, d: u32) -> &[BigUint] {
        self.degrees.get(&d).map_or(&[], |s| &s.torsion)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &Summand)> {
        self.degrees.iter().map(|(&d, s)| (d, s))
    }

    pub fn top_degree(&self) -> Option<u32> {
        self.degrees.keys().next_back().copied()
    }

    pub fn is_free(&self) -> bool {
        self.degrees.values().all(|s| s.torsion.is_empty())
    }

    /// If this is the homology of a sphere, its dimension.
    pub fn sphere_dimension(&self) -> Option<u32> {
        let mut it = self.degrees.iter();
        match (it.next(), it.next()) {
            (Some((&d, s)), None) if s.rank == 1 && s.torsion.is_empty() => Some(d),
            _ => None,
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, s) in other.iter() {
            out.add_summand(d, s.clone());
        }
        out
    }

    /// Degree shift by `t`: the homology of the `t`-fold suspension.
    pub fn suspend(&self, t: u32) -> Self {
        GradedAbelianGroup {
            degrees: self
                .degrees
                .iter()
                .map(|(&d, s)| (d + t, s.clone()))
                .collect(),
        }
    }

    /// Reduced homology of a smash product, by the Künneth formula with a
    /// Tor term one degree up.
    pub fn smash(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (p, a) in self.iter() {
            for (q, b) in other.iter() {
                let mut tensor = Vec::new();
                let mut tor = Vec::new();
                for _ in 0..a.rank {
                    tensor.extend(b.torsion.iter().cloned());
                }
                for _ in 0..b.rank {
                    tensor.extend(a.torsion.iter().cloned());
                }
                for s in &a.torsion {
                    for t in &b.torsion {
                        let g = s.gcd(t);
                        if !g.is_one() {
                            tensor.push(g.clone());
                            tor.push(g);
                        }
                    }
                }
                out.add_summand(p + q, Summand::new(a.rank * b.rank, tensor));
                if !tor.is_empty() {
                    out.add_summand(p + q + 1, Summand::new(0, tor));
                }
            }
        }
        out
    }

    /// Alternating sum of ranks.
    pub fn euler_characteristic(&self) -> i64 {
        self.iter()
            .map(|(d, s)| {
                if d % 2 == 0 {
                    s.rank as i64
                } else {
                    -(s.rank as i64)
                }
            })
            .sum()
    }
}

impl Serialize for GradedAbelianGroup {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        struct Degrees<'a>(&'a BTreeMap<u32, Summand>);
        impl Serialize for Degrees<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(self.0.len()))?;
                for (d, summand) in self.0 {
                    map.serialize_entry(&d.to_string(), summand)?;
                }
                map.end()
            }
        }
        let mut st = s.serialize_struct("GradedAbelianGroup", 1)?;
        st.serialize_field("degrees", &Degrees(&self.degrees))?;
        st.end()
    }
}

impl fmt::Display for GradedAbelianGroup {
    /// `H1=Z^2 H2=Z+Z/2`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (j, (d, s)) in self.iter().enumerate() {
            if j > 0 {
                f.write_str(" ")?;
            }
            let mut parts = Vec::new();
            match s.rank {
                0 => {}
                1 => parts.push("Z".to_string()),
                r => parts.push(format!("Z^{r}")),
            }
            parts.extend(s.torsion.iter().map(|t| format!("Z/{t}")));
            write!(f, "H{d}={}", parts.join("+"))?;
        }
        Ok(())
    }
}
