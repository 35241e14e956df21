//! The dynamical operators: rowmotion on order ideals, K-promotion and
//! K-evacuation of increasing tableaux, flow paths, the flip map across an
//! autonomous dualization, orbit computation, and the ideal/weak-labeling
//! encoding of `J(P x c)`.

use std::collections::HashMap;
use std::sync::Arc;

use crate::bits::ElemSet;
use crate::error::{Error, Result};
use crate::poset::{OrderIdeal, Poset};
use crate::tableau::IncreasingTableau;

pub const DEFAULT_ORBIT_CAP: u64 = 100_000_000;

/// Reusable scratch state for repeated promotions on one poset.
///
/// A promotion runs the swap stages (1,2),(1,3),...,(1,q) on tiles (connected
/// components of the cover graph restricted to the two active labels; a tile
/// is nontrivial when it has at least two elements) and then decrements all
/// labels, wrapping 0 to q.
pub struct Promoter<'p> {
    poset: &'p Poset,
    q: u16,
    mark: Vec<u64>,
    visited: Vec<u64>,
    comp: Vec<u64>,
    generation: u64,
    comp_generation: u64,
    stack: Vec<u32>,
    members: Vec<u32>,
    ones: Vec<u32>,
    others: Vec<u32>,
}

impl<'p> Promoter<'p> {
    pub fn new(poset: &'p Poset, q: usize) -> Promoter<'p> {
        let n = poset.n();
        Promoter {
            poset,
            q: q as u16,
            mark: vec![0; n],
            visited: vec![0; n],
            comp: vec![0; n],
            generation: 0,
            comp_generation: 0,
            stack: Vec::new(),
            members: Vec::new(),
            ones: Vec::new(),
            others: Vec::new(),
        }
    }

    /// One swap stage for the label pair (1, i).
    fn stage(&mut self, labels: &mut [u16], i: u16, mut flow: Option<&mut Vec<(u32, u32)>>) {
        self.ones.clear();
        self.others.clear();
        for (x, &l) in labels.iter().enumerate() {
            if l == 1 {
                self.ones.push(x as u32);
            } else if l == i {
                self.others.push(x as u32);
            }
        }
        if self.ones.is_empty() || self.others.is_empty() {
            return; // every tile is trivial
        }
        self.generation += 1;
        let generation = self.generation;
        for &x in self.ones.iter().chain(&self.others) {
            self.mark[x as usize] = generation;
        }
        for s in 0..self.ones.len() + self.others.len() {
            let seed = if s < self.ones.len() {
                self.ones[s]
            } else {
                self.others[s - self.ones.len()]
            };
            if self.visited[seed as usize] == generation {
                continue;
            }
            // flood fill the tile containing `seed`
            self.members.clear();
            self.stack.clear();
            self.stack.push(seed);
            self.visited[seed as usize] = generation;
            while let Some(x) = self.stack.pop() {
                self.members.push(x);
                for &y in self
                    .poset
                    .upper_covers(x as usize)
                    .iter()
                    .chain(self.poset.lower_covers(x as usize))
                {
                    if self.mark[y as usize] == generation && self.visited[y as usize] != generation
                    {
                        self.visited[y as usize] = generation;
                        self.stack.push(y);
                    }
                }
            }
            if self.members.len() < 2 {
                continue; // trivial tile
            }
            for &m in &self.members {
                let l = &mut labels[m as usize];
                *l = if *l == 1 { i } else { 1 };
            }
            if let Some(pairs) = flow.as_deref_mut() {
                self.comp_generation += 1;
                for &m in &self.members {
                    self.comp[m as usize] = self.comp_generation;
                }
                for &m in &self.members {
                    for &u in self.poset.upper_covers(m as usize) {
                        if self.comp[u as usize] == self.comp_generation {
                            pairs.push((m, u));
                        }
                    }
                }
            }
        }
    }

    /// In-place K-promotion of a label vector of height `q`.
    pub fn promote(&mut self, labels: &mut [u16]) {
        self.promote_recording(labels, None)
    }

    pub fn promote_recording(&mut self, labels: &mut [u16], mut flow: Option<&mut Vec<(u32, u32)>>) {
        for i in 2..=self.q {
            self.stage(labels, i, flow.as_deref_mut());
        }
        for l in labels.iter_mut() {
            *l = if *l == 1 { self.q } else { *l - 1 };
        }
    }

    /// In-place inverse of `promote`: increment with wraparound, then run the
    /// swap stages in reverse order.
    pub fn unpromote(&mut self, labels: &mut [u16]) {
        for l in labels.iter_mut() {
            *l = if *l == self.q { 1 } else { *l + 1 };
        }
        for i in (2..=self.q).rev() {
            self.stage(labels, i, None);
        }
    }
}

/// K-promotion of an increasing tableau.
pub fn k_promotion(t: &IncreasingTableau) -> IncreasingTableau {
    let mut labels = t.labels().to_vec();
    Promoter::new(t.poset(), t.q()).promote(&mut labels);
    IncreasingTableau::new_unchecked(t.poset(), t.q(), labels)
}

/// Inverse of K-promotion.
pub fn k_promotion_inverse(t: &IncreasingTableau) -> IncreasingTableau {
    let mut labels = t.labels().to_vec();
    Promoter::new(t.poset(), t.q()).unpromote(&mut labels);
    IncreasingTableau::new_unchecked(t.poset(), t.q(), labels)
}

/// Apply `steps` promotions (negative steps apply the inverse).
pub fn k_promotion_power(t: &IncreasingTableau, steps: i64) -> IncreasingTableau {
    let mut labels = t.labels().to_vec();
    let mut pr = Promoter::new(t.poset(), t.q());
    if steps >= 0 {
        for _ in 0..steps {
            pr.promote(&mut labels);
        }
    } else {
        for _ in 0..(-steps) {
            pr.unpromote(&mut labels);
        }
    }
    IncreasingTableau::new_unchecked(t.poset(), t.q(), labels)
}

/// K-evacuation: the unique tableau whose restriction to labels `<= k` is
/// supported on the same subposet as `psi^(q-k)(T)` restricted to labels
/// `<= k`, for every `k`.
///
/// Errors with [`Error::EvacuationInconsistent`] if no labeling satisfies the
/// support conditions or the computed one is not an increasing tableau;
/// either indicates an internal bug, not bad input.
pub fn k_evacuation(t: &IncreasingTableau) -> Result<IncreasingTableau> {
    let q = t.q();
    let n = t.poset().n();
    let mut result = vec![q as u16; n]; // k = q: psi^0(T) has all labels <= q
    let mut supports: Vec<(u16, ElemSet)> = Vec::with_capacity(q);
    let mut cur = t.labels().to_vec();
    let mut pr = Promoter::new(t.poset(), q);
    for j in 1..q {
        pr.promote(&mut cur);
        let k = (q - j) as u16;
        let mut support = ElemSet::empty(n);
        for x in 0..n {
            if cur[x] <= k {
                result[x] = k;
                support.insert(x);
            }
        }
        supports.push((k, support));
    }
    // the labeling must reproduce every support set exactly
    for (k, support) in &supports {
        for x in 0..n {
            if (result[x] <= *k) != support.contains(x) {
                return Err(Error::EvacuationInconsistent);
            }
        }
    }
    IncreasingTableau::new(t.poset(), q, result).map_err(|_| Error::EvacuationInconsistent)
}

/// Rowmotion on set level: the down-closure of the minimal elements of the
/// complement.
pub fn rowmotion_set(p: &Poset, ideal: &ElemSet) -> ElemSet {
    let mut seed = ElemSet::empty(p.n());
    for x in 0..p.n() {
        if !ideal.contains(x) && p.lower_covers(x).iter().all(|&y| ideal.contains(y as usize)) {
            seed.insert(x);
        }
    }
    p.down_closure(&seed)
}

/// Rowmotion of an order ideal.
pub fn rowmotion(i: &OrderIdeal) -> OrderIdeal {
    let members = rowmotion_set(i.poset(), i.members());
    OrderIdeal::new(i.poset(), members).expect("rowmotion image is an ideal")
}

/// An orbit of an invertible operator.
#[derive(Clone, Debug)]
pub struct Orbit<S> {
    /// Least member in the state's natural order.
    pub representative: S,
    pub cardinality: u64,
    /// Full cycle starting at the seed, when requested.
    pub cycle: Option<Vec<S>>,
}

/// Walk the orbit of `seed` under `step`, which must be a bijection on the
/// reachable state space. `cap` bounds the iteration count.
pub fn orbit_of<S, F>(seed: S, mut step: F, cap: u64, keep_cycle: bool) -> Result<Orbit<S>>
where
    S: Clone + Eq + Ord,
    F: FnMut(&S) -> S,
{
    let mut cycle = if keep_cycle { Some(vec![seed.clone()]) } else { None };
    let mut least = seed.clone();
    let mut cur = step(&seed);
    let mut card = 1u64;
    while cur != seed {
        if card >= cap {
            return Err(Error::OrbitCapExceeded(cap));
        }
        if cur < least {
            least = cur.clone();
        }
        if let Some(c) = cycle.as_mut() {
            c.push(cur.clone());
        }
        cur = step(&cur);
        card += 1;
    }
    Ok(Orbit {
        representative: least,
        cardinality: card,
        cycle,
    })
}

/// Orbit of a tableau under K-promotion.
pub fn promotion_orbit(t: &IncreasingTableau, cap: u64, keep_cycle: bool) -> Result<Orbit<IncreasingTableau>> {
    let mut pr = Promoter::new(t.poset(), t.q());
    let seed = t.labels().to_vec();
    let orbit = orbit_of(
        seed,
        |labels| {
            let mut next = labels.clone();
            pr.promote(&mut next);
            next
        },
        cap,
        keep_cycle,
    )?;
    Ok(Orbit {
        representative: IncreasingTableau::new_unchecked(t.poset(), t.q(), orbit.representative),
        cardinality: orbit.cardinality,
        cycle: orbit.cycle.map(|c| {
            c.into_iter()
                .map(|l| IncreasingTableau::new_unchecked(t.poset(), t.q(), l))
                .collect()
        }),
    })
}

/// Orbit of an order ideal under rowmotion.
pub fn rowmotion_orbit(i: &OrderIdeal, cap: u64, keep_cycle: bool) -> Result<Orbit<OrderIdeal>> {
    let p = Arc::clone(i.poset());
    let orbit = orbit_of(
        i.members().clone(),
        |s| rowmotion_set(&p, s),
        cap,
        keep_cycle,
    )?;
    Ok(Orbit {
        representative: OrderIdeal::new(&p, orbit.representative).expect("orbit member is an ideal"),
        cardinality: orbit.cardinality,
        cycle: orbit.cycle.map(|c| {
            c.into_iter()
                .map(|s| OrderIdeal::new(&p, s).expect("orbit member is an ideal"))
                .collect()
        }),
    })
}

/// Cover pairs swept by nontrivial tiles during one promotion, and the set of
/// their endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowPath {
    pub pairs: Vec<(u32, u32)>,
    pub streambed: ElemSet,
}

pub fn flow_path(t: &IncreasingTableau) -> FlowPath {
    let mut labels = t.labels().to_vec();
    let mut pairs = Vec::new();
    Promoter::new(t.poset(), t.q()).promote_recording(&mut labels, Some(&mut pairs));
    pairs.sort_unstable();
    pairs.dedup();
    let mut streambed = ElemSet::empty(t.poset().n());
    for &(a, b) in &pairs {
        streambed.insert(a as usize);
        streambed.insert(b as usize);
    }
    FlowPath { pairs, streambed }
}

/// Flip the labels on an autonomous subset `a`: if the labels used on `a` are
/// `v_1 < ... < v_k`, an element labeled `v_i` gets `v_{k+1-i}`. The result is
/// an increasing tableau on the poset with `a` dualized.
pub fn flip_map(t: &IncreasingTableau, a: &ElemSet) -> Result<IncreasingTableau> {
    let dualized = Arc::new(t.poset().dualize_autonomous(a)?);
    flip_map_onto(t, a, &dualized)
}

/// As [`flip_map`], with the dualized poset supplied by the caller (useful
/// when flipping many tableaux across the same dualization).
pub fn flip_map_onto(
    t: &IncreasingTableau,
    a: &ElemSet,
    dualized: &Arc<Poset>,
) -> Result<IncreasingTableau> {
    let mut used: Vec<u16> = a.iter().map(|x| t.label(x)).collect();
    used.sort_unstable();
    used.dedup();
    let mut labels = t.labels().to_vec();
    for x in a.iter() {
        let i = used.binary_search(&labels[x]).expect("label collected above");
        labels[x] = used[used.len() - 1 - i];
    }
    IncreasingTableau::new(dualized, t.q(), labels)
}

/// Encode an ideal of `P x c` as the labeling counting, for each `p`, how many
/// chain layers `(p, 0..w(p))` the ideal contains. The labeling takes values
/// in `0..=c` and is weakly order-reversing; for `c = 1` it is the indicator
/// of an ideal of `P`. Product elements are indexed `(p, j) -> p*c + j`.
pub fn ideal_to_weak_labeling(p: &Poset, c: usize, ideal: &ElemSet) -> Result<Vec<usize>> {
    if !p.is_graded() {
        return Err(Error::NotGraded);
    }
    let mut w = vec![0usize; p.n()];
    for x in 0..p.n() {
        let mut count = 0;
        for j in 0..c {
            if ideal.contains(x * c + j) {
                if j != count {
                    return Err(Error::NotAnIdeal); // not a prefix of the chain fiber
                }
                count = j + 1;
            }
        }
        w[x] = count;
    }
    // weakly order-reversing along covers of P
    for &(a, b) in p.covers() {
        if w[a as usize] < w[b as usize] {
            return Err(Error::NotAnIdeal);
        }
    }
    Ok(w)
}

/// Inverse of [`ideal_to_weak_labeling`].
pub fn weak_labeling_to_ideal(p: &Poset, c: usize, w: &[usize]) -> Result<ElemSet> {
    if !p.is_graded() {
        return Err(Error::NotGraded);
    }
    if w.len() != p.n() {
        return Err(Error::LabelCountMismatch {
            got: w.len(),
            expected: p.n(),
        });
    }
    for (x, &v) in w.iter().enumerate() {
        if v > c {
            return Err(Error::LabelOutOfRange {
                label: v as i64,
                q: c,
            });
        }
        let _ = x;
    }
    for &(a, b) in p.covers() {
        if w[a as usize] < w[b as usize] {
            return Err(Error::NotAnIdeal);
        }
    }
    let mut s = ElemSet::empty(p.n() * c);
    for x in 0..p.n() {
        for j in 0..w[x] {
            s.insert(x * c + j);
        }
    }
    Ok(s)
}

/// The strictly increasing labeling `x -> (c - w(x)) + r(x)` of height
/// `rank + c + 1`, where `r(x)` counts the elements of a longest chain with
/// maximum `x`. A bijection with `Inc^{rank+c+1}(P)` for posets all of whose
/// maximal chains have the same length; it is not equivariant.
pub fn weak_labeling_to_tableau(
    p: &Arc<Poset>,
    c: usize,
    w: &[usize],
) -> Result<IncreasingTableau> {
    let rd = p.rank_data();
    if !rd.is_graded {
        return Err(Error::NotGraded);
    }
    if w.len() != p.n() {
        return Err(Error::LabelCountMismatch { got: w.len(), expected: p.n() });
    }
    if let Some(&bad) = w.iter().find(|&&v| v > c) {
        return Err(Error::LabelOutOfRange { label: bad as i64, q: c });
    }
    let q = rd.rank + c + 1;
    let labels: Vec<u16> = (0..p.n())
        .map(|x| (c - w[x] + rd.elem_rank[x] + 1) as u16)
        .collect();
    IncreasingTableau::new(p, q, labels)
}

/// Walk every promotion orbit of a set of seed label vectors exactly once.
///
/// `seeds` must enumerate a union of full orbits (e.g. all tableaux of a
/// height, or all packed ones); each orbit is reported once via `on_orbit`
/// with (size, lexicographically least member). The visited set is dropped
/// for a slower seed-filtering pass when it would exceed `memory_cap` states.
pub(crate) struct OrbitWalker<'p> {
    promoter: Promoter<'p>,
    visited: HashMap<Vec<u16>, ()>,
    pub states_seen: u64,
    state_cap: u64,
    memory_cap: u64,
    low_memory: bool,
    restart_pending: bool,
}

impl<'p> OrbitWalker<'p> {
    pub fn new(poset: &'p Poset, q: usize, state_cap: u64, memory_cap: u64) -> Self {
        OrbitWalker {
            promoter: Promoter::new(poset, q),
            visited: HashMap::new(),
            states_seen: 0,
            state_cap,
            memory_cap,
            low_memory: false,
            restart_pending: false,
        }
    }

    /// True exactly once, right after the walker dropped its visited set and
    /// switched to seed filtering; the caller must restart enumeration.
    pub fn take_restart_pending(&mut self) -> bool {
        std::mem::take(&mut self.restart_pending)
    }

    /// Returns Some((size, representative)) if `seed` starts a new orbit.
    pub fn consider(&mut self, seed: &[u16]) -> Result<Option<(u64, Vec<u16>)>> {
        if !self.low_memory && self.visited.contains_key(seed) {
            return Ok(None);
        }
        let mut members: Vec<Vec<u16>> = Vec::new();
        let mut least = seed.to_vec();
        let mut cur = seed.to_vec();
        let mut size = 0u64;
        loop {
            size += 1;
            if size > self.state_cap {
                return Err(Error::CapExceeded {
                    what: "promotion orbit states",
                    cap: self.state_cap,
                });
            }
            if !self.low_memory {
                members.push(cur.clone());
            }
            self.promoter.promote(&mut cur);
            if cur.as_slice() == seed {
                break;
            }
            if cur.as_slice() < least.as_slice() {
                least = cur.clone();
            }
        }
        if self.low_memory {
            // Count an orbit only when seeded by its least member.
            if least.as_slice() != seed {
                return Ok(None);
            }
            return Ok(Some((size, least)));
        }
        self.states_seen += size;
        if self.states_seen > self.state_cap {
            return Err(Error::CapExceeded {
                what: "promotion census states",
                cap: self.state_cap,
            });
        }
        if self.states_seen > self.memory_cap {
            // Too many states to remember: switch strategy. The caller must
            // restart enumeration from scratch.
            self.visited.clear();
            self.visited.shrink_to_fit();
            self.low_memory = true;
            self.restart_pending = true;
            return Err(Error::CapExceeded {
                what: "promotion census memory (retry in low-memory mode)",
                cap: self.memory_cap,
            });
        }
        for m in members {
            self.visited.insert(m, ());
        }
        Ok(Some((size, least)))
    }
}
