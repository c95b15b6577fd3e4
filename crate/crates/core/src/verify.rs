//! One-call re-checks of the classification results, the cubic
//! non-existence result and the open conjectures, at small orders.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{canonical_key, CanonKey};
use crate::distance::is_self_two_distance;
use crate::enumerate::{
    canonical_graph6, search_self_two_distance, EnumerateError, EnumerationConfig, SearchCertificate, SearchFilter,
};
use crate::generators::{cycle, named_graph, NamedGraph};
use crate::graph::Graph;
use crate::graph6;

pub const REPORT_SCHEMA: &str = "dg.verification_report.v1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SrgParams {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    /// `t` when the parameters are `(4t+1, 2t, t-1, t)`.
    pub fn self_two_distance_t(&self) -> Option<usize> {
        let t = self.mu;
        (t >= 1 && self.v == 4 * t + 1 && self.k == 2 * t && self.lambda + 1 == t).then_some(t)
    }
}

/// Parameters of `g` if it is strongly regular. Requires at least one
/// adjacent and one non-adjacent pair.
pub fn srg_parameters(g: &Graph) -> Option<SrgParams> {
    let k = g.is_regular()?;
    let mut lambda = None;
    let mut mu = None;
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            let slot = if g.has_edge(u, v) { &mut lambda } else { &mut mu };
            let c = g.codegree(u, v);
            match *slot {
                None => *slot = Some(c),
                Some(x) if x != c => return None,
                Some(_) => {}
            }
        }
    }
    Some(SrgParams { v: g.order(), k, lambda: lambda?, mu: mu? })
}

pub fn is_sum_of_two_squares(n: u64) -> bool {
    (0..).take_while(|a| a * a <= n).any(|a| {
        let r = n - a * a;
        let b = r.isqrt();
        b * b == r
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    C4Free,
    DisjointTriangles,
    DiamondFree,
}

impl Family {
    pub fn claim_id(self) -> &'static str {
        match self {
            Family::C4Free => "c4_free_classification",
            Family::DisjointTriangles => "disjoint_triangles_classification",
            Family::DiamondFree => "diamond_free_classification",
        }
    }

    pub fn filter(self) -> SearchFilter {
        let mut f = SearchFilter { min_n: 3, ..SearchFilter::connected() };
        match self {
            Family::C4Free => f.require_c4_free = true,
            Family::DisjointTriangles => f.require_disjoint_triangles = true,
            Family::DiamondFree => f.require_diamond_free = true,
        }
        f
    }

    /// The classification's graphs with at most `max_n` vertices: odd cycles
    /// from 5 up, `C5|C3`, and for the diamond-free family the two extra
    /// fixtures.
    pub fn expected_graphs(self, max_n: usize) -> Vec<Graph> {
        let mut out: Vec<Graph> = (5..=max_n).step_by(2).map(|n| cycle(n).expect("n >= 5")).collect();
        let mut named = vec![NamedGraph::C5C3];
        if self == Family::DiamondFree {
            named.extend([NamedGraph::Fig511, NamedGraph::Fig512]);
        }
        out.extend(named.into_iter().map(named_graph).filter(|g| g.order() <= max_n));
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Confirmed,
    Counterexample,
}

/// Whether a report checks a proved statement or gathers evidence for an
/// open one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Nature {
    Verification,
    Evidence,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: String,
    pub claim_id: String,
    pub nature: Nature,
    pub max_n: usize,
    pub status: Status,
    pub expected_hits: Vec<String>,
    pub actual_hits: Vec<String>,
    /// Hits that contradict the claim.
    pub counterexamples: Vec<String>,
    /// Expected hits the scan did not find.
    pub missing: Vec<String>,
    /// One certificate per scanned order.
    pub certificates: Vec<SearchCertificate>,
}

impl VerificationReport {
    fn assemble(
        claim_id: &str,
        nature: Nature,
        max_n: usize,
        expected: HitSet,
        actual: HitSet,
        counterexamples: HitSet,
        certificates: Vec<SearchCertificate>,
    ) -> VerificationReport {
        let encode = |set: &HitSet| set.iter().map(|(_, k)| canonical_graph6(k)).collect();
        let missing: BTreeSet<_> = expected.difference(&actual).cloned().collect();
        let status = if counterexamples.is_empty() && missing.is_empty() && expected == actual {
            Status::Confirmed
        } else {
            Status::Counterexample
        };
        VerificationReport {
            schema: REPORT_SCHEMA.to_string(),
            claim_id: claim_id.to_string(),
            nature,
            max_n,
            status,
            expected_hits: encode(&expected),
            actual_hits: encode(&actual),
            counterexamples: encode(&counterexamples),
            missing: encode(&missing),
            certificates,
        }
    }

    pub fn is_confirmed(&self) -> bool {
        self.status == Status::Confirmed
    }

    /// The report with every certificate's timing fields cleared.
    pub fn without_timing(&self) -> VerificationReport {
        VerificationReport {
            certificates: self.certificates.iter().map(SearchCertificate::without_timing).collect(),
            ..self.clone()
        }
    }
}

type HitSet = BTreeSet<(usize, CanonKey)>;

fn keyed(g: &Graph) -> (usize, CanonKey) {
    (g.order(), canonical_key(g))
}

fn scan(
    filter: &SearchFilter,
    orders: impl IntoIterator<Item = usize>,
    config: &EnumerationConfig,
) -> Result<(HitSet, Vec<SearchCertificate>), VerifyError> {
    let mut hits = BTreeSet::new();
    let mut certificates = Vec::new();
    for n in orders {
        let cert = search_self_two_distance(n, filter, config)?;
        for h in &cert.hits {
            let g = graph6::decode(h).expect("certificates hold valid graph6");
            hits.insert(keyed(&g));
        }
        certificates.push(cert);
    }
    Ok((hits, certificates))
}

/// Scans every connected class with `3 ≤ n ≤ max_n` in the family and
/// compares the hit set with the classification.
pub fn verify_classification(
    family: Family,
    max_n: usize,
    config: &EnumerationConfig,
) -> Result<VerificationReport, VerifyError> {
    let filter = family.filter();
    let (actual, certificates) = scan(&filter, 3..=max_n, config)?;
    let expected: BTreeSet<_> = family.expected_graphs(max_n).iter().map(keyed).collect();
    let counterexamples = actual.difference(&expected).cloned().collect();
    Ok(VerificationReport::assemble(
        family.claim_id(),
        Nature::Verification,
        max_n,
        expected,
        actual,
        counterexamples,
        certificates,
    ))
}

pub fn cubic_filter() -> SearchFilter {
    SearchFilter { regular_degree: Some(3), min_n: 4, ..SearchFilter::connected() }
}

/// Scans every connected cubic class on at most `max_n` vertices; confirmed
/// when none is a hit.
pub fn verify_no_cubic(max_n: usize, config: &EnumerationConfig) -> Result<VerificationReport, VerifyError> {
    let orders = (4..=max_n).step_by(2);
    let (actual, certificates) = scan(&cubic_filter(), orders, config)?;
    Ok(VerificationReport::assemble(
        "no_cubic",
        Nature::Verification,
        max_n,
        BTreeSet::new(),
        actual.clone(),
        actual,
        certificates,
    ))
}

/// Evidence scans over all connected hits with `3 ≤ n ≤ max_n`: the first
/// report lists hits that are not 2-connected, the second hits that are
/// regular of odd degree.
pub fn conjecture_scan(
    max_n: usize,
    config: &EnumerationConfig,
) -> Result<(VerificationReport, VerificationReport), VerifyError> {
    let filter = SearchFilter { min_n: 3, ..SearchFilter::connected() };
    let (actual, certificates) = scan(&filter, 3..=max_n, config)?;
    let split = |bad: &dyn Fn(&Graph) -> bool| -> (BTreeSet<_>, BTreeSet<_>) {
        actual.iter().cloned().partition(|(_, k)| !bad(&k.graph()))
    };
    let (ok_2c, bad_2c) = split(&|g| !g.is_two_connected());
    let (ok_odd, bad_odd) = split(&|g| g.is_regular().is_some_and(|d| d % 2 == 1));
    Ok((
        VerificationReport::assemble(
            "hits_are_two_connected",
            Nature::Evidence,
            max_n,
            ok_2c,
            actual.clone(),
            bad_2c,
            certificates.clone(),
        ),
        VerificationReport::assemble(
            "no_odd_regular_hits",
            Nature::Evidence,
            max_n,
            ok_odd,
            actual,
            bad_odd,
            certificates,
        ),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RevalidationError {
    #[error("hit {0:?} is not valid graph6: {1}")]
    Decode(String, graph6::Graph6Error),
    #[error("hit {0:?} is not isomorphic to its 2-distance graph")]
    NotAHit(String),
    #[error("hit {0:?} does not pass the search filter")]
    FilterRejects(String),
    #[error("hit {0:?} is not in canonical form")]
    NotCanonical(String),
}

/// Re-checks every hit of a certificate from its graph6 string alone.
pub fn revalidate(cert: &SearchCertificate) -> Result<(), RevalidationError> {
    for h in &cert.hits {
        let g = graph6::decode(h).map_err(|e| RevalidationError::Decode(h.clone(), e))?;
        if !is_self_two_distance(&g).holds {
            return Err(RevalidationError::NotAHit(h.clone()));
        }
        if !cert.filter.accepts(&g) || g.order() != cert.n {
            return Err(RevalidationError::FilterRejects(h.clone()));
        }
        if canonical_key(&g).graph() != g {
            return Err(RevalidationError::NotCanonical(h.clone()));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{paley, path};

    #[test]
    fn srg_examples() {
        assert_eq!(srg_parameters(&cycle(5).unwrap()), Some(SrgParams { v: 5, k: 2, lambda: 0, mu: 1 }));
        assert_eq!(srg_parameters(&paley(13).unwrap()), Some(SrgParams { v: 13, k: 6, lambda: 2, mu: 3 }));
        assert_eq!(srg_parameters(&path(4).unwrap()), None);
        assert_eq!(srg_parameters(&cycle(6).unwrap()), None);
        // Complete graphs have no non-adjacent pair.
        assert_eq!(srg_parameters(&crate::generators::complete(4).unwrap()), None);
        assert_eq!(srg_parameters(&named_graph(NamedGraph::Petersen)), Some(SrgParams { v: 10, k: 3, lambda: 0, mu: 1 }));
    }

    #[test]
    fn t_values() {
        assert_eq!(SrgParams { v: 5, k: 2, lambda: 0, mu: 1 }.self_two_distance_t(), Some(1));
        assert_eq!(SrgParams { v: 10, k: 3, lambda: 0, mu: 1 }.self_two_distance_t(), None);
    }

    #[test]
    fn sums_of_two_squares() {
        let yes: Vec<u64> = (0..30).filter(|&n| is_sum_of_two_squares(n)).collect();
        assert_eq!(yes, [0, 1, 2, 4, 5, 8, 9, 10, 13, 16, 17, 18, 20, 25, 26, 29]);
    }

    #[test]
    fn small_classifications() {
        let config = EnumerationConfig::default();
        for family in [Family::C4Free, Family::DisjointTriangles] {
            let r = verify_classification(family, 8, &config).unwrap();
            assert!(r.is_confirmed(), "{r:?}");
            assert_eq!(r.actual_hits.len(), 3);
        }
        let r = verify_classification(Family::DiamondFree, 8, &config).unwrap();
        assert!(r.is_confirmed());
        assert_eq!(r.actual_hits.len(), 4);
        for c in &r.certificates {
            revalidate(c).unwrap();
        }
    }

    #[test]
    fn small_no_cubic() {
        let config = EnumerationConfig::default();
        for max_n in [4, 10] {
            let r = verify_no_cubic(max_n, &config).unwrap();
            assert!(r.is_confirmed() && r.actual_hits.is_empty());
        }
    }

    #[test]
    fn missing_expected_hit_fails() {
        let r = VerificationReport::assemble(
            "x",
            Nature::Verification,
            5,
            BTreeSet::from([keyed(&cycle(5).unwrap())]),
            BTreeSet::new(),
            BTreeSet::new(),
            Vec::new(),
        );
        assert_eq!(r.status, Status::Counterexample);
        assert_eq!(r.missing.len(), 1);
    }

    #[test]
    fn conjecture_reports_are_evidence() {
        let (a, b) = conjecture_scan(7, &EnumerationConfig::default()).unwrap();
        for r in [&a, &b] {
            assert_eq!(r.nature, Nature::Evidence);
            assert!(r.is_confirmed());
        }
        let json = serde_json::to_string(&a).unwrap();
        assert!(json.contains("\"nature\":\"evidence\""));
    }
}
