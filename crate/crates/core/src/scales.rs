//! The five standard scale families.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitset::ObjectSet;
use crate::context::{ExtentFamily, FormalContext};
use crate::error::ScaleError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScaleFamily {
    Nominal,
    Ordinal,
    Interordinal,
    Contranominal,
    Crown,
}

impl ScaleFamily {
    /// Report column order.
    pub const ALL: [ScaleFamily; 5] = [
        ScaleFamily::Nominal,
        ScaleFamily::Ordinal,
        ScaleFamily::Interordinal,
        ScaleFamily::Contranominal,
        ScaleFamily::Crown,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ScaleFamily::Nominal => "nominal",
            ScaleFamily::Ordinal => "ordinal",
            ScaleFamily::Interordinal => "interordinal",
            ScaleFamily::Contranominal => "contranominal",
            ScaleFamily::Crown => "crown",
        }
    }

    /// Every subscale of a member is again (equivalent to) a member.
    pub fn is_hereditary(self) -> bool {
        !matches!(self, ScaleFamily::Crown)
    }

    pub fn min_arity(self) -> usize {
        match self {
            ScaleFamily::Crown => 3,
            _ => 1,
        }
    }

    fn check(self, n: usize) -> Result<(), ScaleError> {
        if n < self.min_arity() {
            return Err(ScaleError::Arity {
                family: self.name(),
                min: self.min_arity(),
                n,
            });
        }
        Ok(())
    }

    /// `|Ext|` of the arity-`n` member.
    pub fn extent_count(self, n: usize) -> usize {
        match self {
            ScaleFamily::Nominal if n >= 2 => n + 2,
            ScaleFamily::Nominal => n,
            ScaleFamily::Ordinal => n,
            ScaleFamily::Interordinal if n >= 2 => n * (n + 1) / 2 + 1,
            ScaleFamily::Interordinal => n,
            ScaleFamily::Contranominal => 1usize.checked_shl(n as u32).unwrap_or(usize::MAX),
            ScaleFamily::Crown => 2 * n + 2,
        }
    }

    /// Whether `∅` is an extent of the arity-`n` member.
    pub fn has_empty_extent(self, n: usize) -> bool {
        match self {
            ScaleFamily::Nominal | ScaleFamily::Interordinal => n >= 2,
            ScaleFamily::Ordinal => n == 0,
            ScaleFamily::Contranominal | ScaleFamily::Crown => true,
        }
    }
}

impl fmt::Display for ScaleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScaleFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        ScaleFamily::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown scale family `{s}`"))
    }
}

fn numbered(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// The standard scale of `family` on `[n]`; objects are labelled `1..n`.
pub fn make_scale(family: ScaleFamily, n: usize) -> Result<FormalContext, ScaleError> {
    family.check(n)?;
    let ctx = match family {
        ScaleFamily::Nominal => FormalContext::from_fn(numbered(n), numbered(n), |g, m| g == m),
        ScaleFamily::Ordinal => FormalContext::from_fn(numbered(n), numbered(n), |g, m| g <= m),
        ScaleFamily::Interordinal => {
            let attributes = (1..=n)
                .map(|k| format!("{k}≤"))
                .chain((1..=n).map(|k| format!("{k}≥")))
                .collect();
            FormalContext::from_fn(numbered(n), attributes, |g, m| if m < n { g <= m } else { g >= m - n })
        }
        ScaleFamily::Contranominal => FormalContext::from_fn(numbered(n), numbered(n), |g, m| g != m),
        ScaleFamily::Crown => FormalContext::from_fn(numbered(n), numbered(n), |a, b| {
            a == b || (a == n - 1 && b == 0) || b == a + 1
        }),
    };
    Ok(ctx.expect("numeric labels are unique"))
}

/// Closed-form extent family of the arity-`n` member.
pub fn scale_extents_direct(family: ScaleFamily, n: usize) -> Result<ExtentFamily, ScaleError> {
    family.check(n)?;
    let one = |i: usize| ObjectSet::from_indices(n, [i]);
    let full = ObjectSet::full(n);
    let mut sets = Vec::new();
    match family {
        ScaleFamily::Nominal => {
            if n >= 2 {
                sets.push(ObjectSet::empty(n));
            }
            sets.extend((0..n).map(one));
            sets.push(full);
        }
        ScaleFamily::Ordinal => {
            sets.extend((1..=n).map(|k| ObjectSet::from_indices(n, 0..k)));
        }
        ScaleFamily::Interordinal => {
            if n >= 2 {
                sets.push(ObjectSet::empty(n));
            }
            for lo in 0..n {
                for hi in lo..n {
                    sets.push(ObjectSet::from_indices(n, lo..=hi));
                }
            }
        }
        ScaleFamily::Contranominal => {
            assert!(n < 32, "contranominal extent family too large to list");
            sets.extend((0..1u64 << n).map(|mask| ObjectSet::from_mask(n, mask)));
        }
        ScaleFamily::Crown => {
            sets.push(ObjectSet::empty(n));
            sets.extend((0..n).map(one));
            sets.extend((0..n).map(|i| ObjectSet::from_indices(n, [i, (i + 1) % n])));
            sets.push(full);
        }
    }
    Ok(ExtentFamily::from_sets(sets))
}

pub fn is_hereditary(family: ScaleFamily) -> bool {
    family.is_hereditary()
}
