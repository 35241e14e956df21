//! Named property suites, runnable from the CLI (`verify <suite>`) and reused
//! by the acceptance tests. Each suite returns one line per checked property
//! group; a suite passes when every line passes.

use std::collections::BTreeMap;
use std::ops::ControlFlow;
use std::sync::Arc;

use crate::bits::ElemSet;
use crate::census::{
    census_conserves, promotion_census, rowmotion_census, rowmotion_census_on, CensusOptions,
};
use crate::dynamics::{
    flip_map_onto, k_evacuation, k_promotion, k_promotion_power, promotion_orbit, rowmotion_orbit,
    rowmotion_set,
};
use crate::enumerate::{count_packed_chainwise, enumerate_increasing};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::minuscule::{
    doubling, minimal_tableau, minuscule, pd_map, radical, trees, MinusculeFamily,
};
use crate::nrp::{bounded_graded_posets, nrp_check, NrpOptions};
use crate::poset::Poset;
use crate::tableau::{gcd, predicted_orbit_size, ContentVector, IncreasingTableau};

#[derive(Clone, Debug)]
pub struct CheckLine {
    pub label: String,
    pub pass: bool,
    pub details: String,
}

#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub name: String,
    pub checks: Vec<CheckLine>,
}

impl SuiteResult {
    fn new(name: &str) -> SuiteResult {
        SuiteResult {
            name: name.to_string(),
            checks: Vec::new(),
        }
    }

    fn push(&mut self, label: impl Into<String>, pass: bool, details: impl Into<String>) {
        self.checks.push(CheckLine {
            label: label.into(),
            pass,
            details: details.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

pub const SUITE_NAMES: &[&str] = &[
    "empty-orbit",
    "bijectivity",
    "content-rotation",
    "flip-orbits",
    "pendant-shift",
    "autonomous-involution",
    "census-conservation",
    "equivariance",
    "nrp-consistency",
    "deflation",
    "doubletree",
    "minuscule-trees",
    "doubletree-rigidity",
];

pub fn suite_names() -> &'static [&'static str] {
    SUITE_NAMES
}

pub fn run_suite(name: &str) -> Result<SuiteResult> {
    match name {
        "empty-orbit" => Ok(empty_orbit_suite()),
        "bijectivity" => Ok(bijectivity_suite()),
        "content-rotation" => Ok(content_rotation_suite()),
        "flip-orbits" => flip_orbits_suite(),
        "pendant-shift" => pendant_shift_suite(),
        "autonomous-involution" => autonomous_involution_suite(),
        "census-conservation" => census_conservation_suite(),
        "equivariance" => equivariance_suite(),
        "nrp-consistency" => nrp_consistency_suite(),
        "deflation" => deflation_suite(),
        "doubletree" => doubletree_suite(),
        "minuscule-trees" => minuscule_trees_suite(),
        "doubletree-rigidity" => doubletree_rigidity_suite(),
        _ => Err(Error::Format(format!(
            "unknown suite '{name}'; available: {}",
            SUITE_NAMES.join(", ")
        ))),
    }
}

pub fn run_all() -> Result<Vec<SuiteResult>> {
    SUITE_NAMES.iter().map(|n| run_suite(n)).collect()
}

/// Small poset library used across suites; every member has at most 6
/// elements and the list includes graded, ungraded, bounded, unbounded,
/// and disconnected shapes.
pub fn small_library() -> Vec<Poset> {
    let mut out = vec![
        Poset::chain(1),
        Poset::chain(2),
        Poset::chain(4),
        Poset::antichain(2),
        Poset::antichain(3),
        Poset::product(&Poset::chain(2), &Poset::chain(2)),
        Poset::product(&Poset::chain(2), &Poset::chain(3)),
        Poset::from_covers(3, &[(0, 1), (0, 2)]).unwrap(), // V
        Poset::from_covers(3, &[(0, 2), (1, 2)]).unwrap(), // Lambda
        fixtures::poset_n_prime(),
        Poset::ordinal_sum(&Poset::antichain(2), &Poset::antichain(2)),
        Poset::from_covers(3, &[(0, 1)]).unwrap(), // chain + isolated point
        Poset::from_covers(5, &[(0, 1), (1, 2), (3, 4)]).unwrap(), // two chains
        Poset::from_covers(6, &[(0, 2), (1, 2), (2, 3), (3, 4), (3, 5)]).unwrap(),
    ];
    out.extend(bounded_graded_posets(5, 10).unwrap());
    out
}

fn graded_library() -> Vec<Poset> {
    small_library()
        .into_iter()
        .filter(|p| p.rank_data().is_graded)
        .collect()
}

/// The rowmotion orbit of the empty ideal has size rank + 2; applied to
/// P x c this gives rank(P) + c + 1. The "wave" argument needs every element
/// to lie below a top-rank element, so the quantifier is posets all of whose
/// maximal chains have the same length.
fn empty_orbit_suite() -> SuiteResult {
    let mut suite = SuiteResult::new("empty-orbit");
    for p in graded_library()
        .into_iter()
        .filter(Poset::has_equal_maximal_chains)
    {
        let arc = Arc::new(p);
        let orbit = rowmotion_orbit(&crate::poset::OrderIdeal::empty(&arc), 1_000_000, false)
            .expect("orbit closes");
        let expected = arc.rank() as u64 + 2;
        suite.push(
            format!("empty ideal orbit on {:?}", arc.as_ref()),
            orbit.cardinality == expected,
            format!("got {}, expected {}", orbit.cardinality, expected),
        );
    }
    for c in 1..=2 {
        let base = Poset::product(&Poset::chain(2), &Poset::chain(2));
        let prod = Arc::new(Poset::product(&base, &Poset::chain(c)));
        let orbit = rowmotion_orbit(&crate::poset::OrderIdeal::empty(&prod), 1_000_000, false)
            .expect("orbit closes");
        let expected = base.rank() as u64 + c as u64 + 1;
        suite.push(
            format!("empty ideal orbit on 2x2 x chain {c}"),
            orbit.cardinality == expected,
            format!("got {}, expected {}", orbit.cardinality, expected),
        );
    }
    suite
}

/// Rowmotion is a bijection on J(P); promotion is a bijection on Inc^q(P).
fn bijectivity_suite() -> SuiteResult {
    let mut suite = SuiteResult::new("bijectivity");
    for p in small_library() {
        let ideals = p.enumerate_ideals().unwrap();
        let mut images: Vec<ElemSet> = ideals.iter().map(|i| rowmotion_set(&p, i)).collect();
        let all_ideals = images.iter().all(|i| p.is_ideal(i));
        images.sort();
        images.dedup();
        suite.push(
            format!("rowmotion bijective on J of {:?}", p),
            all_ideals && images.len() == ideals.len(),
            format!("{} ideals", ideals.len()),
        );
    }
    for p in small_library() {
        if p.n() > 6 {
            continue;
        }
        let arc = Arc::new(p);
        let mut ok = true;
        let mut states = 0u64;
        for q in 1..=6usize {
            let mut images = std::collections::HashSet::new();
            let mut count = 0u64;
            let _ = enumerate_increasing(&arc, q, false, |labels| {
                let t = IncreasingTableau::new(&arc, q, labels.to_vec()).unwrap();
                images.insert(k_promotion(&t).labels().to_vec());
                count += 1;
                ControlFlow::Continue(())
            });
            ok &= images.len() as u64 == count;
            states += count;
        }
        suite.push(
            format!("promotion bijective on {:?}", arc.as_ref()),
            ok,
            format!("{states} tableaux over q<=6"),
        );
    }
    suite
}

/// One promotion rotates the content vector one step (first digit to the end).
fn content_rotation_suite() -> SuiteResult {
    let mut suite = SuiteResult::new("content-rotation");
    for p in small_library() {
        if p.n() > 6 {
            continue;
        }
        let arc = Arc::new(p);
        let mut ok = true;
        let mut states = 0u64;
        for q in 1..=7usize {
            let _ = enumerate_increasing(&arc, q, false, |labels| {
                let t = IncreasingTableau::new(&arc, q, labels.to_vec()).unwrap();
                let rotated = t.content_vector().rotate_left_once();
                ok &= k_promotion(&t).content_vector() == rotated;
                states += 1;
                ControlFlow::Continue(())
            });
        }
        suite.push(
            format!("content rotation on {:?}", arc.as_ref()),
            ok,
            format!("{states} tableaux over q<=7"),
        );
    }
    suite
}

/// Flipping the labels on an autonomous subset preserves orbit cardinality
/// tableau by tableau, hence the orbit-size multisets of the dualized pair
/// agree.
fn flip_orbits_suite() -> Result<SuiteResult> {
    let mut suite = SuiteResult::new("flip-orbits");
    for p in small_library() {
        if p.n() > 6 || p.n() < 3 {
            continue;
        }
        let arc = Arc::new(p);
        for a in arc.autonomous_subsets()? {
            let dualized = Arc::new(arc.dualize_autonomous(&a)?);
            let mut ok = true;
            let mut states = 0u64;
            for q in 1..=7usize {
                let _ = enumerate_increasing(&arc, q, false, |labels| {
                    let t = IncreasingTableau::new(&arc, q, labels.to_vec()).unwrap();
                    let f = flip_map_onto(&t, &a, &dualized).expect("flip of autonomous set");
                    let s1 = promotion_orbit(&t, u64::MAX, false).unwrap().cardinality;
                    let s2 = promotion_orbit(&f, u64::MAX, false).unwrap().cardinality;
                    ok &= s1 == s2;
                    states += 1;
                    ControlFlow::Continue(())
                });
                // multiset equality of the censuses
                let c1 = promotion_census(&arc, q, false, &CensusOptions::default())?;
                let c2 = promotion_census(&dualized, q, false, &CensusOptions::default())?;
                ok &= c1.orbit_sizes == c2.orbit_sizes;
            }
            suite.push(
                format!("flip preserves orbits: {:?} / A={:?}", arc.as_ref(), a),
                ok,
                format!("{states} tableaux over q<=7"),
            );
        }
    }
    // every autonomous dualization pair among the bounded graded posets up to
    // 7 elements has matching promotion censuses at every height q <= |P|
    for n in 3..=7usize {
        let mut ok = true;
        let mut pairs = 0u64;
        for p in bounded_graded_posets(n, 10)? {
            let arc = Arc::new(p);
            let mut base: Vec<Option<BTreeMap<u64, u64>>> = vec![None; n + 1];
            for a in arc.autonomous_subsets()? {
                let dualized = arc.dualize_autonomous(&a)?;
                if &dualized == arc.as_ref() {
                    continue; // identity dualization, nothing to compare
                }
                let dualized = Arc::new(dualized);
                pairs += 1;
                for q in 1..=n {
                    if base[q].is_none() {
                        base[q] = Some(
                            promotion_census(&arc, q, false, &CensusOptions::default())?
                                .orbit_sizes,
                        );
                    }
                    let other = promotion_census(&dualized, q, false, &CensusOptions::default())?;
                    ok &= base[q].as_ref() == Some(&other.orbit_sizes);
                }
            }
        }
        suite.push(
            format!("search-pair censuses agree at n={n}"),
            ok,
            format!("{pairs} dualization pairs, q <= {n}"),
        );
    }
    Ok(suite)
}

/// If P + 1 has NRP rowmotion then so does 1 + P (and conversely), for graded
/// P whose maximal elements share a rank (so that P + 1 is graded too).
fn pendant_shift_suite() -> Result<SuiteResult> {
    let mut suite = SuiteResult::new("pendant-shift");
    for p in graded_library() {
        if p.n() > 6 {
            continue;
        }
        let rd = p.rank_data();
        let tops_even = p
            .maximal_elements()
            .iter()
            .all(|&x| rd.elem_rank[x] == rd.rank);
        if !tops_even {
            continue;
        }
        let top = Arc::new(Poset::ordinal_sum(&p, &Poset::chain(1)));
        let bottom = Arc::new(Poset::ordinal_sum(&Poset::chain(1), &p));
        let opts = NrpOptions::default();
        let v1 = nrp_check(&top, &opts).map_err(Error::from)?;
        let v2 = nrp_check(&bottom, &opts).map_err(Error::from)?;
        suite.push(
            format!("nrp(P+1) == nrp(1+P) for {:?}", p),
            v1.is_nrp == v2.is_nrp,
            format!("P+1: {}, 1+P: {}", v1.is_nrp, v2.is_nrp),
        );
    }
    Ok(suite)
}

/// Dualizing an autonomous subset is an involution on labeled posets and
/// preserves the comparability graph.
fn autonomous_involution_suite() -> Result<SuiteResult> {
    let mut suite = SuiteResult::new("autonomous-involution");
    let mut extra = small_library();
    extra.push(fixtures::poset_p_ab(1, 2));
    for p in extra {
        if p.n() > 7 {
            continue;
        }
        let mut ok = true;
        let mut tested = 0;
        for a in p.autonomous_subsets()? {
            let q = p.dualize_autonomous(&a)?;
            ok &= q.comparability_graph() == p.comparability_graph();
            ok &= q.dualize_autonomous(&a)?.covers() == p.covers();
            tested += 1;
        }
        suite.push(
            format!("dualization involution on {:?}", p),
            ok,
            format!("{tested} autonomous subsets"),
        );
    }
    Ok(suite)
}

/// Census totals agree with the independent element-wise enumeration count,
/// and the packed chainwise count agrees with the packed filter.
fn census_conservation_suite() -> Result<SuiteResult> {
    let mut suite = SuiteResult::new("census-conservation");
    for p in small_library() {
        if p.n() > 6 {
            continue;
        }
        let arc = Arc::new(p);
        let mut ok = true;
        for q in 1..=6usize {
            let all = promotion_census(&arc, q, false, &CensusOptions::default())?;
            ok &= census_conserves(&arc, q, false, &all);
            let packed = promotion_census(&arc, q, true, &CensusOptions::default())?;
            ok &= census_conserves(&arc, q, true, &packed);
            ok &= packed.total == count_packed_chainwise(&arc, q);
        }
        suite.push(
            format!("conservation on {:?}", arc.as_ref()),
            ok,
            "q <= 6, packed and full".to_string(),
        );
    }
    Ok(suite)
}

/// The orbit-size multiset of rowmotion on J(P x c) equals that of promotion
/// on Inc^{rank+c+1}(P), for bounded graded posets up to 5 elements and the
/// bee hummingbird, c <= 3.
fn equivariance_suite() -> Result<SuiteResult> {
    let mut suite = SuiteResult::new("equivariance");
    let mut posets = bounded_graded_posets(5, 10)?;
    posets.extend(bounded_graded_posets(4, 10)?);
    posets.push(fixtures::bee_hummingbird());
    for p in posets {
        let arc = Arc::new(p);
        let mut ok = true;
        let mut detail = String::new();
        for c in 1..=3usize {
            let q = arc.rank() + c + 1;
            let rm = rowmotion_census(&arc, c, &CensusOptions::default())?;
            let pm = promotion_census(&arc, q, false, &CensusOptions::default())?;
            ok &= rm.orbit_sizes == pm.orbit_sizes;
            detail = format!("last: c={c}, {} states", rm.total);
        }
        suite.push(
            format!("orbit multisets match on {:?}", arc.as_ref()),
            ok,
            detail,
        );
    }
    Ok(suite)
}

/// The packed-tableau criterion agrees with the direct NRP definition
/// (no rowmotion orbit of J(P x c) coprime to rank + c + 1, c up to |P|)
/// on bounded graded posets with at most 6 elements.
fn nrp_consistency_suite() -> Result<SuiteResult> {
    let mut suite = SuiteResult::new("nrp-consistency");
    let mut posets = Vec::new();
    for n in 1..=6 {
        posets.extend(bounded_graded_posets(n, 10)?);
    }
    for p in posets {
        let arc = Arc::new(p);
        let verdict = nrp_check(&arc, &NrpOptions::default()).map_err(Error::from)?;
        let mut direct = true;
        for c in 1..=arc.n() {
            let q = (arc.rank() + c + 1) as u64;
            let rm = rowmotion_census(&arc, c, &CensusOptions::default())?;
            if rm.orbit_sizes.keys().any(|&size| gcd(size, q) == 1) {
                direct = false;
                break;
            }
        }
        suite.push(
            format!("criterion matches direct definition on {:?}", arc.as_ref()),
            verdict.is_nrp == direct,
            format!("packed criterion: {}, direct: {}", verdict.is_nrp, direct),
        );
    }
    Ok(suite)
}

/// Label-set preservation under psi^q, deflation commutation, the content
/// orbit-size formula against direct orbits of inflated tableaux, and
/// "coprime orbits are packed", exhaustively on bounded graded posets with at
/// most 5 elements and q <= 7.
fn deflation_suite() -> Result<SuiteResult> {
    let mut suite = SuiteResult::new("deflation");
    let mut posets = Vec::new();
    for n in 1..=5 {
        posets.extend(bounded_graded_posets(n, 10)?);
    }
    for p in posets {
        let arc = Arc::new(p);
        let mut preserved = true;
        let mut commutes = true;
        let mut coprime_packed = true;
        let mut states = 0u64;
        for q in 1..=7usize {
            let _ = enumerate_increasing(&arc, q, false, |labels| {
                let t = IncreasingTableau::new(&arc, q, labels.to_vec()).unwrap();
                let (tb, d) = t.deflate();
                let power = k_promotion_power(&t, q as i64);
                preserved &= power.content_vector() == t.content_vector();
                commutes &= power.deflate().0 == k_promotion_power(&tb, d as i64);
                states += 1;
                ControlFlow::Continue(())
            });
            // walk all orbits; a coprime-size orbit must be entirely packed
            let mut visited: std::collections::HashSet<Vec<u16>> = Default::default();
            let _ = enumerate_increasing(&arc, q, false, |labels| {
                if visited.contains(labels) {
                    return ControlFlow::Continue(());
                }
                let t = IncreasingTableau::new(&arc, q, labels.to_vec()).unwrap();
                let orbit = promotion_orbit(&t, u64::MAX, true).unwrap();
                let members = orbit.cycle.unwrap();
                if gcd(orbit.cardinality, q as u64) == 1 {
                    coprime_packed &= members.iter().all(|m| m.is_packed());
                }
                for m in members {
                    visited.insert(m.labels().to_vec());
                }
                ControlFlow::Continue(())
            });
        }
        suite.push(
            format!("label sets preserved by psi^q on {:?}", arc.as_ref()),
            preserved,
            format!("{states} tableaux"),
        );
        suite.push(
            format!("deflation commutes with psi on {:?}", arc.as_ref()),
            commutes,
            format!("{states} tableaux"),
        );
        suite.push(
            format!("coprime orbits are packed on {:?}", arc.as_ref()),
            coprime_packed,
            "q <= 7".to_string(),
        );
        // orbit-size formula vs direct orbits of inflated tableaux
        let mut formula_ok = true;
        let mut instances = 0u64;
        for d in 1..=arc.n().min(7) {
            let reps =
                crate::census::promotion_orbit_representatives(&arc, d, true, &CensusOptions::default())?;
            for (t1, rep) in reps {
                for q in d..=7usize {
                    for mask in 0u32..(1 << q) {
                        if mask.count_ones() as usize != d {
                            continue;
                        }
                        let bits: Vec<bool> = (0..q).map(|i| mask >> i & 1 == 1).collect();
                        let v = ContentVector::from_bits(bits);
                        let inflated = IncreasingTableau::inflate(&rep, &v)?;
                        let direct = promotion_orbit(&inflated, u64::MAX, false)?.cardinality;
                        formula_ok &= predicted_orbit_size(q, &v, t1)? == direct;
                        instances += 1;
                    }
                }
            }
        }
        suite.push(
            format!("orbit-size formula on {:?}", arc.as_ref()),
            formula_ok,
            format!("{instances} (orbit, content) pairs"),
        );
    }
    // coprime orbits are packed on arbitrary finite posets, not only the
    // bounded graded ones: re-run that check across the mixed library
    for p in small_library() {
        if p.n() > 6 {
            continue;
        }
        let arc = Arc::new(p);
        let mut ok = true;
        for q in 1..=7usize {
            let mut visited: std::collections::HashSet<Vec<u16>> = Default::default();
            let _ = enumerate_increasing(&arc, q, false, |labels| {
                if visited.contains(labels) {
                    return ControlFlow::Continue(());
                }
                let t = IncreasingTableau::new(&arc, q, labels.to_vec()).unwrap();
                let orbit = promotion_orbit(&t, u64::MAX, true).unwrap();
                let members = orbit.cycle.unwrap();
                if gcd(orbit.cardinality, q as u64) == 1 {
                    ok &= members.iter().all(|m| m.is_packed());
                }
                for m in members {
                    visited.insert(m.labels().to_vec());
                }
                ControlFlow::Continue(())
            });
        }
        suite.push(
            format!("coprime orbits are packed on {:?}", arc.as_ref()),
            ok,
            "library poset, q <= 7".to_string(),
        );
    }
    Ok(suite)
}

/// Doubletree restriction is invariant under psi^q; psi^q factors as
/// PD.E.PD.E; E is an involution; radical/doubling intertwine PD and E.
fn doubletree_suite() -> Result<SuiteResult> {
    let mut suite = SuiteResult::new("doubletree");
    let families = [
        MinusculeFamily::Rectangle { a: 2, b: 3 },
        MinusculeFamily::Rectangle { a: 3, b: 3 },
        MinusculeFamily::Staircase { n: 3 },
        MinusculeFamily::Staircase { n: 4 },
        MinusculeFamily::Propeller { k: 1 },
        MinusculeFamily::Propeller { k: 2 },
    ];
    for fam in &families {
        let p = Arc::new(minuscule(fam)?);
        let sigma = pd_map(&p, Some(fam))?;
        let dt = trees(&p).doubletree;
        let dt_elems: Vec<usize> = dt.iter().collect();
        let q_max = (p.n() + 1).min(9);
        let mut dt_ok = true;
        let mut factor_ok = true;
        let mut involution_ok = true;
        let mut states = 0u64;
        for q in 1..=q_max {
            let _ = enumerate_increasing(&p, q, false, |labels| {
                let t = IncreasingTableau::new(&p, q, labels.to_vec()).unwrap();
                let power = k_promotion_power(&t, q as i64);
                dt_ok &= dt_elems.iter().all(|&x| t.label(x) == power.label(x));
                let e = k_evacuation(&t).unwrap();
                involution_ok &= k_evacuation(&e).unwrap() == t;
                let composite = k_evacuation(&e.pd_apply(&sigma).unwrap())
                    .unwrap()
                    .pd_apply(&sigma)
                    .unwrap();
                factor_ok &= composite == power;
                states += 1;
                ControlFlow::Continue(())
            });
        }
        suite.push(
            format!("doubletree fixed by psi^q on {}", fam.cli_name()),
            dt_ok,
            format!("{states} tableaux, q <= {q_max}"),
        );
        suite.push(
            format!("psi^q = PD.E.PD.E on {}", fam.cli_name()),
            factor_ok,
            format!("{states} tableaux"),
        );
        suite.push(
            format!("E is an involution on {}", fam.cli_name()),
            involution_ok,
            format!("{states} tableaux"),
        );
    }
    // radical/doubling identities on the 3-staircase
    let fam = MinusculeFamily::Staircase { n: 3 };
    let s3 = Arc::new(minuscule(&fam)?);
    let rect_fam = MinusculeFamily::Rectangle { a: 3, b: 3 };
    let rect_sigma = pd_map(&Arc::new(minuscule(&rect_fam)?), Some(&rect_fam))?;
    let stair_sigma = pd_map(&s3, Some(&fam))?;
    let mut pd_ok = true;
    let mut ev_ok = true;
    let mut states = 0u64;
    for q in 1..=(s3.n() + 1).min(9) {
        let _ = enumerate_increasing(&s3, q, false, |labels| {
            let t = IncreasingTableau::new(&s3, q, labels.to_vec()).unwrap();
            let squared = doubling(&t).unwrap();
            let pd_sq = squared.pd_apply(&rect_sigma).unwrap();
            pd_ok &= radical(&pd_sq).unwrap() == t.pd_apply(&stair_sigma).unwrap();
            let ev_sq = k_evacuation(&squared).unwrap();
            ev_ok &= radical(&ev_sq).unwrap() == k_evacuation(&t).unwrap();
            states += 1;
            ControlFlow::Continue(())
        });
    }
    suite.push(
        "radical(PD(T^2)) = PD(T) on staircase:3",
        pd_ok,
        format!("{states} tableaux"),
    );
    suite.push(
        "radical(E(T^2)) = E(T) on staircase:3",
        ev_ok,
        format!("{states} tableaux"),
    );
    Ok(suite)
}

/// Top tree is the anti-involution image of the bottom tree; doubletree sizes
/// match the known counts for the example families.
fn minuscule_trees_suite() -> Result<SuiteResult> {
    let mut suite = SuiteResult::new("minuscule-trees");
    let mut fams: Vec<MinusculeFamily> = vec![
        MinusculeFamily::Staircase { n: 3 },
        MinusculeFamily::Staircase { n: 4 },
        MinusculeFamily::Staircase { n: 5 },
        MinusculeFamily::CayleyMoufang,
    ];
    for a in 1..=3usize {
        for b in a..=5 {
            if a * b <= 16 {
                fams.push(MinusculeFamily::Rectangle { a, b });
            }
        }
    }
    for k in 0..=6 {
        fams.push(MinusculeFamily::Propeller { k });
    }
    for fam in &fams {
        let p = Arc::new(minuscule(fam)?);
        let sigma = pd_map(&p, Some(fam))?;
        let t = trees(&p);
        let image = ElemSet::from_iter(p.n(), t.bottom_tree.iter().map(|x| sigma.apply(x)));
        suite.push(
            format!("top tree = PD(bottom tree) on {}", fam.cli_name()),
            image == t.top_tree,
            format!("|BT| = {}", t.bottom_tree.len()),
        );
    }
    let r35 = minuscule(&MinusculeFamily::Rectangle { a: 3, b: 5 })?;
    suite.push(
        "doubletree size of rect:3x5",
        trees(&r35).doubletree.len() == 12,
        format!("got {}", trees(&r35).doubletree.len()),
    );
    let s5 = minuscule(&MinusculeFamily::Staircase { n: 5 })?;
    suite.push(
        "doubletree size of staircase:5",
        trees(&s5).doubletree.len() == 11,
        format!("got {}", trees(&s5).doubletree.len()),
    );
    let cm = minuscule(&MinusculeFamily::CayleyMoufang)?;
    suite.push(
        "doubletree size of cayley-moufang",
        trees(&cm).doubletree.len() == 12,
        format!("got {}", trees(&cm).doubletree.len()),
    );
    let fr = minuscule(&MinusculeFamily::Freudenthal)?;
    suite.push(
        "doubletree size of freudenthal",
        trees(&fr).doubletree.len() == 14,
        format!("got {}", trees(&fr).doubletree.len()),
    );
    for k in 0..=3 {
        let p = minuscule(&MinusculeFamily::Propeller { k })?;
        suite.push(
            format!("doubletree covers propeller:{k}"),
            trees(&p).doubletree.len() == p.n(),
            String::new(),
        );
    }
    Ok(suite)
}

/// On the 3-staircase and the 2nd propeller, the only tableau whose
/// doubletree restriction survives one promotion is the minimal tableau.
fn doubletree_rigidity_suite() -> Result<SuiteResult> {
    let mut suite = SuiteResult::new("doubletree-rigidity");
    for fam in [
        MinusculeFamily::Staircase { n: 3 },
        MinusculeFamily::Propeller { k: 2 },
    ] {
        let p = Arc::new(minuscule(&fam)?);
        let dt: Vec<usize> = trees(&p).doubletree.iter().collect();
        let minimal = minimal_tableau(&p)?;
        let mut ok = true;
        let mut fixed = 0u64;
        for q in 1..=p.n() {
            let _ = enumerate_increasing(&p, q, false, |labels| {
                let t = IncreasingTableau::new(&p, q, labels.to_vec()).unwrap();
                let image = k_promotion(&t);
                if dt.iter().all(|&x| t.label(x) == image.label(x)) {
                    fixed += 1;
                    ok &= t == minimal;
                }
                ControlFlow::Continue(())
            });
        }
        suite.push(
            format!("doubletree-fixed tableau is minimal on {}", fam.cli_name()),
            ok && fixed == 1,
            format!("{fixed} fixed tableau(x) found"),
        );
    }
    Ok(suite)
}

/// Report for printing: one line per check.
pub fn format_suite(result: &SuiteResult) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    for check in &result.checks {
        let status = if check.pass { "PASS" } else { "FAIL" };
        writeln!(out, "{status} {}: {}", check.label, check.details).unwrap();
    }
    let status = if result.passed() { "PASS" } else { "FAIL" };
    writeln!(
        out,
        "{status} suite {} ({} checks)",
        result.name,
        result.checks.len()
    )
    .unwrap();
    out
}

/// Helper shared with the CLI and acceptance tests: promotion census as a
/// sorted (size, count) list.
pub fn census_pairs(census: &crate::census::Census) -> Vec<(u64, u64)> {
    census.orbit_sizes.iter().map(|(&s, &c)| (s, c)).collect()
}

/// Direct check that a rowmotion census on an explicit product poset matches
/// the census computed through `rowmotion_census` (used in tests).
pub fn rowmotion_multiset_on_product(p: &Poset, c: usize) -> Result<BTreeMap<u64, u64>> {
    let product = Poset::product(p, &Poset::chain(c));
    Ok(rowmotion_census_on(&product, &CensusOptions::default())?.orbit_sizes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suites_pass() {
        for name in ["empty-orbit", "autonomous-involution", "pendant-shift"] {
            let suite = run_suite(name).unwrap();
            assert!(
                suite.passed(),
                "suite {name} failed:\n{}",
                format_suite(&suite)
            );
        }
    }

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(run_suite("no-such-suite").is_err());
    }
}
