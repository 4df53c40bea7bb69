use std::collections::BTreeMap;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::helly::{helly_number, HellyCertificate};
use crate::partitions::ceil_log2;
use crate::radon::{partition_number_with, radon_number_with, CaptureIndex, PartitionNumber};
use crate::set::{ElementSet, Multiset};
use crate::space::ConvexitySpace;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::NotApplicable => "na",
        }
    }

    /// Pass or not applicable.
    pub fn ok(self) -> bool {
        self != CheckStatus::Fail
    }
}

impl Serialize for CheckStatus {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub status: CheckStatus,
    pub details: Vec<String>,
}

impl Check {
    fn new() -> Self {
        Check {
            status: CheckStatus::NotApplicable,
            details: Vec::new(),
        }
    }

    fn record(&mut self, holds: bool, detail: String) {
        match (self.status, holds) {
            (CheckStatus::Fail, _) => {}
            (_, false) => self.status = CheckStatus::Fail,
            (_, true) => self.status = CheckStatus::Pass,
        }
        self.details.push(detail);
    }
}

#[derive(Debug, Clone)]
pub struct Checks {
    /// `h < r₂`.
    pub levi: Check,
    /// `r_k ≤ r₂^⌈log₂ k⌉` for `k ≥ 3`.
    pub jamison: Check,
    /// `r_k ≤ (k-1)|X| + 1`.
    pub pigeonhole: Check,
    /// `r_k ≤ r_{k+1}` where both values come from search.
    pub monotone: Check,
    /// The subset and multiset definitions of `r₂` agree.
    pub radon_agreement: Check,
}

impl Checks {
    pub fn named(&self) -> [(&'static str, &Check); 5] {
        [
            ("levi", &self.levi),
            ("jamison", &self.jamison),
            ("pigeonhole", &self.pigeonhole),
            ("monotone", &self.monotone),
            ("radon_agreement", &self.radon_agreement),
        ]
    }

    pub fn all_ok(&self) -> bool {
        self.named().iter().all(|(_, c)| c.status.ok())
    }
}

/// `{"levi": "pass", .., "details": {"levi": [..], ..}}`.
impl Serialize for Checks {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let named = self.named();
        let details: BTreeMap<&str, &Vec<String>> =
            named.iter().map(|(n, c)| (*n, &c.details)).collect();
        let mut map = serializer.serialize_map(Some(named.len() + 1))?;
        for (name, check) in named {
            map.serialize_entry(name, &check.status)?;
        }
        map.serialize_entry("details", &details)?;
        map.end()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Certificates {
    pub helly: HellyCertificate,
    /// Largest set with no Radon partition.
    pub radon: ElementSet,
    /// Per `k`, a largest multiset with no Tverberg `k`-partition.
    pub partition: BTreeMap<usize, Option<Multiset>>,
}

/// Invariants of a space and the inequalities relating them.
#[derive(Debug, Clone, Serialize)]
pub struct BoundsReport {
    pub ground_size: usize,
    pub r2: Option<usize>,
    pub rk: BTreeMap<usize, Option<usize>>,
    /// `k` values whose `r_k` is the `|X| + 1` convention.
    pub by_convention: Vec<usize>,
    pub helly: usize,
    /// `r₂ = 2`, which the theory sets aside as trivial.
    pub degenerate: bool,
    pub checks: Checks,
    pub certificates: Certificates,
}

impl BoundsReport {
    pub fn partition_number(&self, k: usize) -> Option<usize> {
        self.rk.get(&k).copied().flatten()
    }
}

/// Computes `r₂`, `r_k` for `2 ≤ k ≤ k_max`, and `h`, then checks the
/// Levi, Jamison, pigeonhole and monotonicity inequalities.
pub fn verify_bounds(
    space: &ConvexitySpace,
    k_max: usize,
    budget: &mut Budget,
) -> Result<BoundsReport> {
    if k_max < 2 {
        return Err(Error::InvalidArgument(format!(
            "k_max must be at least 2, got {k_max}"
        )));
    }
    let n = space.ground_size();
    let index = CaptureIndex::new(space, budget)?;
    let radon = radon_number_with(space, &index, budget)?;
    let helly = helly_number(space, budget)?;
    let numbers: Vec<PartitionNumber> = (2..=k_max)
        .map(|k| partition_number_with(space, &index, k, budget))
        .collect::<Result<_>>()?;

    let mut checks = Checks {
        levi: Check::new(),
        jamison: Check::new(),
        pigeonhole: Check::new(),
        monotone: Check::new(),
        radon_agreement: Check::new(),
    };

    let r2_multiset = numbers[0].value;
    match radon.value {
        Some(r2) => {
            checks
                .levi
                .record(helly.value < r2, format!("h = {} < r2 = {r2}", helly.value));
            checks.radon_agreement.record(
                r2 == r2_multiset,
                format!("subsets give {r2}, multisets give {r2_multiset}"),
            );
        }
        None => {
            checks.levi.details.push("r2 does not exist".into());
            checks.jamison.details.push("r2 does not exist".into());
            checks.radon_agreement.record(
                r2_multiset == n + 1,
                format!(
                    "ground set unsplittable; multisets give {r2_multiset} (expected {})",
                    n + 1
                ),
            );
        }
    }

    for p in &numbers {
        let k = p.k;
        let ceiling = (k - 1) * n + 1;
        checks.pigeonhole.record(
            p.value <= ceiling,
            format!("r{k} = {} <= {ceiling}", p.value),
        );
        if let (Some(r2), true) = (radon.value, k >= 3) {
            let exp = ceil_log2(k);
            let bound = (r2 as u128).checked_pow(exp);
            let holds = bound.is_none_or(|b| p.value as u128 <= b);
            let shown = bound.map_or_else(|| format!("{r2}^{exp}"), |b| b.to_string());
            checks
                .jamison
                .record(holds, format!("r{k} = {} <= r2^{exp} = {shown}", p.value));
        }
    }

    for pair in numbers.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        if a.by_convention || b.by_convention {
            checks.monotone.details.push(format!(
                "r{} <= r{}: skipped, convention r_k = |X|+1 for k > |X|",
                a.k, b.k
            ));
            continue;
        }
        checks.monotone.record(
            a.value <= b.value,
            format!("r{} = {} <= r{} = {}", a.k, a.value, b.k, b.value),
        );
    }

    let rk = numbers.iter().map(|p| (p.k, Some(p.value))).collect();
    let by_convention = numbers
        .iter()
        .filter(|p| p.by_convention)
        .map(|p| p.k)
        .collect();
    let partition = numbers
        .iter()
        .map(|p| (p.k, p.certificate.clone()))
        .collect();
    Ok(BoundsReport {
        ground_size: n,
        r2: radon.value,
        rk,
        by_convention,
        helly: helly.value,
        degenerate: radon.value == Some(2),
        checks,
        certificates: Certificates {
            helly: helly.certificate,
            radon: radon.largest_unsplittable,
            partition,
        },
    })
}
