//! The NRP decision procedure, generation of bounded graded posets up to
//! isomorphism, the classification search, and family identification.
//!
//! A graded poset P is NRP when for every positive c no rowmotion orbit of
//! `J(P x c)` has size coprime to `rank(P) + c + 1`. Equivalently, no packed
//! tableau of height `q in [rank+2, |P|]` has promotion orbit size coprime to
//! `q`; heights above `|P|` carry no packed tableaux, so the check is finite.

use std::collections::BTreeMap;
use std::ops::ControlFlow;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, is_isomorphic};
use crate::census::{walk_promotion_orbits, CensusOptions, WalkEvent};
use crate::error::{Error, Result};
use crate::fixtures::{poset_n, poset_p_ab, poset_w};
use crate::minuscule::{minuscule, MinusculeFamily};
use crate::poset::Poset;
use crate::tableau::{gcd, IncreasingTableau};

/// A packed orbit whose size is coprime to its height.
#[derive(Clone, Debug)]
pub struct NrpWitness {
    pub q: usize,
    pub orbit_size: u64,
    pub representative: IncreasingTableau,
}

#[derive(Clone, Debug)]
pub struct NrpVerdict {
    pub is_nrp: bool,
    /// Heights examined: `rank+2 ..= n`. Empty (lo > hi) means vacuously NRP.
    pub q_lo: usize,
    pub q_hi: usize,
    /// True when no height admits packed tableaux at all (e.g. chains).
    pub vacuous: bool,
    pub witnesses: Vec<NrpWitness>,
}

#[derive(Clone, Copy, Default)]
pub struct NrpOptions {
    /// Stop at the first witness instead of collecting all of them.
    pub early_exit: bool,
    pub census: CensusOptions,
}

/// An interrupted check: the enumeration cap was hit, but everything verified
/// so far is reported rather than discarded.
#[derive(Debug)]
pub struct NrpInterrupted {
    pub partial: NrpVerdict,
    pub completed_q: Vec<usize>,
    pub cause: Error,
}

impl From<NrpInterrupted> for Error {
    fn from(i: NrpInterrupted) -> Error {
        Error::Format(format!(
            "NRP check interrupted after heights {:?}: {}",
            i.completed_q, i.cause
        ))
    }
}

/// Decide NRP by walking packed promotion orbits at every feasible height.
pub fn nrp_check(p: &Arc<Poset>, opts: &NrpOptions) -> std::result::Result<NrpVerdict, NrpInterrupted> {
    let rd = p.rank_data();
    let q_lo = rd.rank + 2;
    let q_hi = p.n();
    let mut verdict = NrpVerdict {
        is_nrp: true,
        q_lo,
        q_hi,
        vacuous: q_lo > q_hi,
        witnesses: Vec::new(),
    };
    if !rd.is_graded {
        return Err(NrpInterrupted {
            partial: verdict,
            completed_q: Vec::new(),
            cause: Error::NotGraded,
        });
    }
    // Heights are independent work items. With early exit the scan stays
    // sequential (stop at the first witness); otherwise heights fan out and
    // results merge in height order, so output is thread-count independent.
    let mut completed = Vec::new();
    if opts.early_exit {
        for q in q_lo..=q_hi {
            match check_height(p, q, opts) {
                Ok(fresh) => {
                    let found_here = !fresh.is_empty();
                    verdict.witnesses.extend(fresh);
                    completed.push(q);
                    if found_here {
                        break;
                    }
                }
                Err(cause) => {
                    verdict.is_nrp = verdict.witnesses.is_empty();
                    return Err(NrpInterrupted {
                        partial: verdict,
                        completed_q: completed,
                        cause,
                    });
                }
            }
        }
    } else {
        let per_height: Vec<(usize, Result<Vec<NrpWitness>>)> = (q_lo..=q_hi)
            .into_par_iter()
            .map(|q| (q, check_height(p, q, opts)))
            .collect();
        for (q, outcome) in per_height {
            match outcome {
                Ok(fresh) => {
                    verdict.witnesses.extend(fresh);
                    completed.push(q);
                }
                Err(cause) => {
                    verdict.is_nrp = verdict.witnesses.is_empty();
                    return Err(NrpInterrupted {
                        partial: verdict,
                        completed_q: completed,
                        cause,
                    });
                }
            }
        }
    }
    verdict.is_nrp = verdict.witnesses.is_empty();
    // each witness re-verifies independently
    for w in &verdict.witnesses {
        debug_assert!(w.representative.is_packed());
        debug_assert_eq!(
            crate::dynamics::promotion_orbit(&w.representative, u64::MAX, false)
                .map(|o| o.cardinality)
                .unwrap_or(0),
            w.orbit_size
        );
    }
    Ok(verdict)
}

/// Walk the packed orbits of one height, returning the coprime ones.
fn check_height(p: &Arc<Poset>, q: usize, opts: &NrpOptions) -> Result<Vec<NrpWitness>> {
    let mut fresh: Vec<NrpWitness> = Vec::new();
    walk_promotion_orbits(p, q, true, &opts.census, |event| match event {
        WalkEvent::Restart => {
            fresh.clear();
            ControlFlow::Continue(())
        }
        WalkEvent::Orbit { size, least } => {
            if gcd(size, q as u64) == 1 {
                fresh.push(NrpWitness {
                    q,
                    orbit_size: size,
                    representative: IncreasingTableau::new(p, q, least.to_vec())
                        .expect("orbit member is a tableau"),
                });
                if opts.early_exit {
                    return ControlFlow::Break(());
                }
            }
            ControlFlow::Continue(())
        }
    })?;
    Ok(fresh)
}

/// Re-verify a witness from its stored representative: recompute the orbit
/// size and the gcd condition.
pub fn verify_witness(w: &NrpWitness) -> bool {
    w.representative.is_packed()
        && w.representative.q() == w.q
        && crate::dynamics::promotion_orbit(&w.representative, u64::MAX, false)
            .map(|o| o.cardinality == w.orbit_size && gcd(o.cardinality, w.q as u64) == 1)
            .unwrap_or(false)
}

/// Which definition of "graded" the search space uses. For bounded posets the
/// two coincide (a cover jumping two rank levels would force maximal chains of
/// different lengths through the bounds), and the generator checks this.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GradingConvention {
    /// A rank function exists: 0 on minimal elements, +1 along covers.
    RankFunction,
    /// Every maximal chain has the same length.
    EqualChains,
}

impl GradingConvention {
    pub fn holds_for(&self, p: &Poset) -> bool {
        match self {
            GradingConvention::RankFunction => p.is_graded(),
            GradingConvention::EqualChains => p.has_equal_maximal_chains(),
        }
    }
}

/// Every bounded graded poset on `n` elements, one per isomorphism class,
/// sorted by canonical form.
///
/// Generation: rank-level profiles `(1, a_1, ..., a_{r-1}, 1)` summing to `n`;
/// between consecutive levels, every bipartite cover pattern in which each
/// upper element has a lower cover and each lower element an upper cover;
/// dedup by canonical form.
pub fn bounded_graded_posets(n: usize, max_n: usize) -> Result<Vec<Poset>> {
    // level sizes index 64-bit cover masks; the combinatorics is hopeless
    // long before this clamp matters
    let bound = max_n.min(16);
    if n > bound {
        return Err(Error::CapExceeded {
            what: "bounded graded poset generation",
            cap: bound as u64,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        return Ok(vec![Poset::chain(1)]);
    }
    let mut seen: std::collections::HashSet<Vec<(u32, u32)>> = std::collections::HashSet::new();
    let mut out: Vec<Poset> = Vec::new();
    for profile in middle_profiles(n - 2) {
        let mut levels = vec![1usize];
        levels.extend(&profile);
        levels.push(1);
        generate_for_profile(&levels, &mut |covers| {
            let p = Poset::from_covers(n, covers).expect("level construction is acyclic");
            debug_assert!(p.is_bounded());
            debug_assert!(p.rank_data().is_graded);
            debug_assert!(p.has_equal_maximal_chains());
            let form = canonical_form(&p);
            if seen.insert(form.clone()) {
                let relabeled = Poset::from_covers(
                    n,
                    &form.iter().map(|&(a, b)| (a as usize, b as usize)).collect::<Vec<_>>(),
                )
                .expect("canonical form is a poset");
                out.push(relabeled);
            }
        });
    }
    out.sort_by_key(canonical_form);
    Ok(out)
}

/// Compositions of `m` into positive parts (any number of parts, including
/// zero parts when m = 0).
fn middle_profiles(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in 1..=rest {
            cur.push(part);
            rec(rest - part, cur, out);
            cur.pop();
        }
    }
    rec(m, &mut Vec::new(), &mut out);
    out
}

/// Enumerate all labeled cover patterns for a level profile.
fn generate_for_profile(levels: &[usize], emit: &mut dyn FnMut(&[(usize, usize)])) {
    let offsets: Vec<usize> = levels
        .iter()
        .scan(0, |acc, &s| {
            let o = *acc;
            *acc += s;
            Some(o)
        })
        .collect();
    let pairs = levels.len() - 1;
    let mut chosen: Vec<Vec<u64>> = Vec::with_capacity(pairs); // per pair: mask of lower covers per upper element
    fn rec(
        levels: &[usize],
        offsets: &[usize],
        pair: usize,
        chosen: &mut Vec<Vec<u64>>,
        emit: &mut dyn FnMut(&[(usize, usize)]),
    ) {
        if pair == levels.len() - 1 {
            let mut covers = Vec::new();
            for (i, masks) in chosen.iter().enumerate() {
                for (u, &mask) in masks.iter().enumerate() {
                    for low in 0..levels[i] {
                        if mask >> low & 1 == 1 {
                            covers.push((offsets[i] + low, offsets[i + 1] + u));
                        }
                    }
                }
            }
            emit(&covers);
            return;
        }
        let lo = levels[pair];
        let hi = levels[pair + 1];
        // every upper needs a nonempty mask; every lower must be covered
        let full: u64 = (1u64 << lo) - 1;
        let mut masks = vec![0u64; hi];
        fn assign(
            u: usize,
            hi: usize,
            lo_full: u64,
            union: u64,
            masks: &mut Vec<u64>,
            next: &mut dyn FnMut(&mut Vec<u64>),
        ) {
            if u == hi {
                if union == lo_full {
                    next(masks);
                }
                return;
            }
            for mask in 1..=lo_full {
                masks[u] = mask;
                // prune: remaining uppers can still cover everything
                assign(u + 1, hi, lo_full, union | mask, masks, next);
            }
            masks[u] = 0;
        }
        let mut cont = |masks: &mut Vec<u64>| {
            chosen.push(masks.clone());
            rec(levels, offsets, pair + 1, chosen, emit);
            chosen.pop();
        };
        assign(0, hi, full, 0, &mut masks, &mut cont);
    }
    rec(levels, &offsets, 0, &mut chosen, emit);
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct SurvivorEntry {
    pub n: usize,
    pub covers: Vec<(u32, u32)>,
    pub family: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchReport {
    pub max_n: usize,
    pub convention: GradingConvention,
    /// Number of isomorphism classes examined per element count.
    pub examined: BTreeMap<usize, u64>,
    pub survivors: BTreeMap<usize, Vec<SurvivorEntry>>,
}

impl SearchReport {
    fn empty(max_n: usize, convention: GradingConvention) -> SearchReport {
        SearchReport {
            max_n,
            convention,
            examined: BTreeMap::new(),
            survivors: BTreeMap::new(),
        }
    }
}

pub struct SearchOptions {
    pub convention: GradingConvention,
    pub nrp: NrpOptions,
    /// Hard bound on n; the generator refuses beyond this.
    pub max_n_bound: usize,
    /// Checkpoint file for resume.
    pub checkpoint: Option<std::path::PathBuf>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            convention: GradingConvention::RankFunction,
            nrp: NrpOptions {
                early_exit: true,
                census: CensusOptions::default(),
            },
            max_n_bound: 10,
            checkpoint: None,
        }
    }
}

/// Classify all bounded graded posets with at most `max_n` elements by the
/// packed-tableau NRP criterion. Deterministic regardless of thread count:
/// results are merged order-insensitively and sorted.
pub fn nrp_search(max_n: usize, opts: &SearchOptions) -> Result<SearchReport> {
    let mut report = load_checkpoint(opts, max_n)?;
    let done: Vec<usize> = report.examined.keys().copied().collect();
    for n in 1..=max_n {
        if done.contains(&n) {
            continue;
        }
        let posets = bounded_graded_posets(n, opts.max_n_bound)?;
        // Both grading conventions coincide on bounded posets; the generator
        // asserts this, and the convention choice is recorded in the report.
        debug_assert!(posets.iter().all(|p| opts.convention.holds_for(p)));
        let results: Vec<(Vec<(u32, u32)>, bool)> = posets
            .par_iter()
            .map(|p| {
                let arc = Arc::new(p.clone());
                let verdict = nrp_check(&arc, &opts.nrp).map(|v| v.is_nrp);
                verdict.map(|is_nrp| (p.covers().to_vec(), is_nrp))
            })
            .collect::<std::result::Result<Vec<_>, NrpInterrupted>>()
            .map_err(Error::from)?;
        report.examined.insert(n, results.len() as u64);
        let mut survivors: Vec<SurvivorEntry> = results
            .into_iter()
            .filter(|(_, is_nrp)| *is_nrp)
            .map(|(covers, _)| {
                let p = Poset::from_covers(
                    n,
                    &covers.iter().map(|&(a, b)| (a as usize, b as usize)).collect::<Vec<_>>(),
                )
                .expect("covers round trip");
                SurvivorEntry {
                    n,
                    family: family_identify(&p),
                    covers,
                }
            })
            .collect();
        survivors.sort_by(|a, b| a.covers.cmp(&b.covers));
        report.survivors.insert(n, survivors);
        save_checkpoint(opts, &report)?;
    }
    Ok(report)
}

fn load_checkpoint(opts: &SearchOptions, max_n: usize) -> Result<SearchReport> {
    let fresh = SearchReport::empty(max_n, opts.convention);
    let Some(path) = &opts.checkpoint else {
        return Ok(fresh);
    };
    match std::fs::read_to_string(path) {
        Ok(text) => {
            let report: SearchReport = serde_json::from_str(&text)?;
            if report.convention != opts.convention {
                return Ok(fresh);
            }
            Ok(SearchReport { max_n, ..report })
        }
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(fresh),
        Err(e) => Err(e.into()),
    }
}

fn save_checkpoint(opts: &SearchOptions, report: &SearchReport) -> Result<()> {
    if let Some(path) = &opts.checkpoint {
        if let Some(parent) = path.parent() {
            std::fs::create_dir_all(parent)?;
        }
        std::fs::write(path, serde_json::to_string_pretty(report)?)?;
    }
    Ok(())
}

/// Match a poset against the named families:
/// minuscule constructors, `P_{a,b}`, the orbit of N under autonomous
/// dualization, and W with its dual. Returns "other" when nothing matches.
pub fn family_identify(p: &Poset) -> String {
    let n = p.n();
    let form = canonical_form(p);
    // minuscule families of the right size
    for a in 1..=n {
        if n % a == 0 {
            let b = n / a;
            if a <= b {
                let r = minuscule(&MinusculeFamily::Rectangle { a, b }).expect("valid");
                if canonical_form(&r) == form {
                    return format!("minuscule: rect:{a}x{b}");
                }
            }
        }
    }
    for k in 1.. {
        let size = k * (k + 1) / 2;
        if size > n {
            break;
        }
        if size == n {
            let s = minuscule(&MinusculeFamily::Staircase { n: k }).expect("valid");
            if canonical_form(&s) == form {
                return format!("minuscule: staircase:{k}");
            }
        }
    }
    if n >= 4 && n % 2 == 0 {
        let k = (n - 4) / 2;
        let prop = minuscule(&MinusculeFamily::Propeller { k }).expect("valid");
        if canonical_form(&prop) == form {
            return format!("minuscule: propeller:{k}");
        }
    }
    if n == 16 {
        let cm = minuscule(&MinusculeFamily::CayleyMoufang).expect("valid");
        if canonical_form(&cm) == form {
            return "minuscule: cayley-moufang".to_string();
        }
    }
    if n == 27 {
        let fr = minuscule(&MinusculeFamily::Freudenthal).expect("valid");
        if canonical_form(&fr) == form {
            return "minuscule: freudenthal".to_string();
        }
    }
    if n >= 4 {
        for a in 0..=(n - 4) {
            let b = n - 4 - a;
            if canonical_form(&poset_p_ab(a, b)) == form {
                return format!("P_{{{a},{b}}}");
            }
        }
    }
    if n == poset_n().n() {
        let family = autonomous_dualization_orbit(&poset_n());
        let nn = poset_n();
        for member in &family {
            if canonical_form(member) == form {
                return if is_isomorphic(member, &nn) {
                    "N".to_string()
                } else {
                    "N-family".to_string()
                };
            }
        }
    }
    if n == 9 {
        let w = poset_w();
        if canonical_form(&w) == form {
            return "W".to_string();
        }
        if canonical_form(&w.dual()) == form {
            return "W-family: dual(W)".to_string();
        }
    }
    "other".to_string()
}

/// Closure of a poset under dualizing autonomous subsets, up to isomorphism.
pub fn autonomous_dualization_orbit(p: &Poset) -> Vec<Poset> {
    let mut out: Vec<Poset> = vec![p.clone()];
    let mut forms: Vec<Vec<(u32, u32)>> = vec![canonical_form(p)];
    let mut frontier = vec![p.clone()];
    while let Some(cur) = frontier.pop() {
        let subsets = match cur.autonomous_subsets() {
            Ok(s) => s,
            Err(_) => continue,
        };
        for a in subsets {
            let q = cur.dualize_autonomous(&a).expect("a is autonomous");
            let f = canonical_form(&q);
            if !forms.contains(&f) {
                forms.push(f);
                out.push(q.clone());
                frontier.push(q);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn bounded_graded_counts_small() {
        assert_eq!(bounded_graded_posets(1, 10).unwrap().len(), 1);
        assert_eq!(bounded_graded_posets(2, 10).unwrap().len(), 1);
        assert_eq!(bounded_graded_posets(3, 10).unwrap().len(), 1);
        assert_eq!(bounded_graded_posets(4, 10).unwrap().len(), 2);
        assert_eq!(bounded_graded_posets(5, 10).unwrap().len(), 4);
        assert!(bounded_graded_posets(11, 10).is_err());
    }

    #[test]
    fn bounded_graded_matches_brute_force_oracle() {
        // Oracle: enumerate all partial orders on n labeled elements by
        // orienting each unordered pair (<, >, incomparable) and filtering
        // transitivity, then count bounded graded classes.
        fn oracle(n: usize) -> usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
                .collect();
            let mut forms = std::collections::HashSet::new();
            let mut assign = vec![0u8; pairs.len()];
            fn rec(
                n: usize,
                pairs: &[(usize, usize)],
                k: usize,
                assign: &mut Vec<u8>,
                forms: &mut std::collections::HashSet<Vec<(u32, u32)>>,
            ) {
                if k == pairs.len() {
                    let mut rel = Vec::new();
                    for (i, &(a, b)) in pairs.iter().enumerate() {
                        match assign[i] {
                            1 => rel.push((a, b)),
                            2 => rel.push((b, a)),
                            _ => {}
                        }
                    }
                    // transitivity check via from_covers + closure comparison
                    let Ok(p) = Poset::from_covers(n, &rel) else { return };
                    // input relation must already be transitive (otherwise the
                    // closure added pairs and this assignment is not a poset)
                    for a in 0..n {
                        for b in 0..n {
                            if a != b && p.lt(a, b) {
                                let listed = rel.contains(&(a, b));
                                if !listed {
                                    return;
                                }
                            }
                        }
                    }
                    if p.is_bounded() {
                        // the two grading conventions coincide on bounded posets
                        assert_eq!(p.rank_data().is_graded, p.has_equal_maximal_chains());
                    }
                    if p.is_bounded() && p.rank_data().is_graded {
                        forms.insert(canonical_form(&p));
                    }
                    return;
                }
                for v in 0..3 {
                    assign[k] = v;
                    rec(n, pairs, k + 1, assign, forms);
                }
            }
            rec(n, &pairs, 0, &mut assign, &mut forms);
            forms.len()
        }
        for n in 1..=5 {
            assert_eq!(
                bounded_graded_posets(n, 10).unwrap().len(),
                oracle(n),
                "class count mismatch at n={n}"
            );
        }
    }

    #[test]
    fn nrp_verdicts_on_named_posets() {
        let opts = NrpOptions::default();
        // rectangles are NRP
        let r23 = Arc::new(minuscule(&MinusculeFamily::Rectangle { a: 2, b: 3 }).unwrap());
        assert!(nrp_check(&r23, &opts).unwrap().is_nrp);
        // chains are vacuously NRP
        let c = Arc::new(Poset::chain(6));
        let v = nrp_check(&c, &opts).unwrap();
        assert!(v.is_nrp && v.vacuous);
        // the bee hummingbird fails with a q=6 witness of orbit size 5
        let h = Arc::new(fixtures::bee_hummingbird());
        let v = nrp_check(&h, &opts).unwrap();
        assert!(!v.is_nrp);
        assert!(v
            .witnesses
            .iter()
            .any(|w| w.q == 6 && w.orbit_size == 5));
        for w in &v.witnesses {
            assert!(verify_witness(w));
        }
        // N and W are NRP
        let n = Arc::new(fixtures::poset_n());
        assert!(nrp_check(&n, &opts).unwrap().is_nrp);
        let w = Arc::new(fixtures::poset_w());
        assert!(nrp_check(&w, &opts).unwrap().is_nrp);
    }

    #[test]
    fn family_identification() {
        let r = minuscule(&MinusculeFamily::Rectangle { a: 3, b: 3 }).unwrap();
        assert_eq!(family_identify(&r), "minuscule: rect:3x3");
        assert_eq!(family_identify(&Poset::chain(9)), "minuscule: rect:1x9");
        assert_eq!(family_identify(&fixtures::poset_p_ab(1, 3)), "P_{1,3}");
        assert_eq!(family_identify(&fixtures::poset_w()), "W");
        assert_eq!(
            family_identify(&fixtures::poset_w().dual()),
            "W-family: dual(W)"
        );
        assert_eq!(family_identify(&fixtures::poset_n()), "N");
        // staircase beats the generic P_{a,b} label for S_3 at 6 elements
        let s3 = minuscule(&MinusculeFamily::Staircase { n: 3 }).unwrap();
        assert_eq!(family_identify(&s3), "minuscule: staircase:3");
    }

    #[test]
    fn n_orbit_under_dualization() {
        // the closure is chain_c + 3-antichain + chain_d over c+d = 6 with
        // c, d >= 0; exactly the five members with c, d >= 1 are bounded
        let orbit = autonomous_dualization_orbit(&fixtures::poset_n());
        assert_eq!(orbit.len(), 7);
        assert_eq!(orbit.iter().filter(|p| p.is_bounded()).count(), 5);
        for (c, d) in [(1, 5), (2, 4), (3, 3), (4, 2), (5, 1)] {
            let expected = Poset::ordinal_sum(
                &Poset::ordinal_sum(&Poset::chain(c), &Poset::antichain(3)),
                &Poset::chain(d),
            );
            assert!(
                orbit.iter().any(|p| is_isomorphic(p, &expected)),
                "missing {c}+A3+{d}"
            );
        }
    }

    #[test]
    fn chain_extensions_of_n_prime_follow_the_congruences() {
        // N' + chain c is NRP exactly when both shifted alphabets keep their
        // orbit sizes non-coprime: 2 | c+4 and 3 | c+5, i.e. c = 4 mod 6
        let np = fixtures::poset_n_prime();
        for c in 1..=10usize {
            let p = Arc::new(Poset::ordinal_sum(&np, &Poset::chain(c)));
            let verdict = nrp_check(&p, &NrpOptions::default()).unwrap();
            assert_eq!(
                verdict.is_nrp,
                c % 6 == 4,
                "N' + chain {c} verdict off"
            );
        }
    }

    #[test]
    fn interrupted_check_reports_partial_progress() {
        let h = Arc::new(fixtures::bee_hummingbird());
        let opts = NrpOptions {
            early_exit: false,
            census: crate::census::CensusOptions {
                state_cap: 50,
                memory_cap: crate::census::DEFAULT_MEMORY_CAP,
            },
        };
        let err = nrp_check(&h, &opts).unwrap_err();
        assert!(matches!(err.cause, crate::error::Error::CapExceeded { .. }));
        // no height finished within 50 states, but the structure is intact
        assert_eq!(err.partial.q_lo, 6);
        assert_eq!(err.partial.q_hi, 10);
        assert!(err.completed_q.len() < 5);
    }

    #[test]
    fn search_to_five_elements() {
        let report = nrp_search(5, &SearchOptions::default()).unwrap();
        assert_eq!(report.examined[&4], 2);
        assert_eq!(report.examined[&5], 4);
        // survivors: the chain and the diamond at n=4; only the chain at n=5
        assert_eq!(report.survivors[&4].len(), 2);
        assert_eq!(report.survivors[&5].len(), 1);
        assert_eq!(report.survivors[&5][0].family, "minuscule: rect:1x5");
    }
}
