//! Orbit censuses: the multiset of orbit sizes of K-promotion on `Inc^q(P)`
//! (optionally packed only) and of rowmotion on `J(P x c)`.

use std::collections::{BTreeMap, HashSet};
use std::ops::ControlFlow;
use std::sync::Arc;

use crate::bits::ElemSet;
use crate::dynamics::{rowmotion_set, OrbitWalker};
use crate::enumerate::{count_increasing, enumerate_increasing, for_each_packed_chainwise};
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::tableau::IncreasingTableau;

pub const DEFAULT_STATE_CAP: u64 = 200_000_000;
pub const DEFAULT_MEMORY_CAP: u64 = 30_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CensusParam {
    PromotionHeight(usize),
    RowmotionChain(usize),
}

/// Multiset of orbit sizes; `total` is the number of states counted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub param: CensusParam,
    pub packed_only: bool,
    pub orbit_sizes: BTreeMap<u64, u64>,
    pub total: u64,
}

impl Census {
    pub fn orbit_count(&self) -> u64 {
        self.orbit_sizes.values().sum()
    }

    pub fn size_multiset(&self) -> &BTreeMap<u64, u64> {
        &self.orbit_sizes
    }

    fn record(&mut self, size: u64) {
        *self.orbit_sizes.entry(size).or_insert(0) += 1;
        self.total += size;
    }

    /// The conservation identity sum(size * count) == total holds by
    /// construction; this re-checks it against an independent count.
    pub fn conserves(&self, independent_total: u64) -> bool {
        self.total == independent_total
            && self
                .orbit_sizes
                .iter()
                .map(|(size, count)| size * count)
                .sum::<u64>()
                == self.total
    }
}

#[derive(Clone, Copy)]
pub struct CensusOptions {
    pub state_cap: u64,
    pub memory_cap: u64,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            state_cap: DEFAULT_STATE_CAP,
            memory_cap: DEFAULT_MEMORY_CAP,
        }
    }
}

/// Event stream of an orbit walk. `Restart` is emitted when the walker falls
/// back to the slower seed-filtering strategy after exceeding its memory cap;
/// the receiver must discard everything accumulated so far.
pub enum WalkEvent<'a> {
    Restart,
    Orbit { size: u64, least: &'a [u16] },
}

/// Walk every promotion orbit on `Inc^q(P)` (packed only when asked), calling
/// `on_event` once per orbit with its size and lexicographically least member.
/// Orbits are seeded from the chainwise packed enumerator or, for full
/// censuses, the element-wise enumerator. Each packed orbit's representative
/// is re-checked to be packed.
pub fn walk_promotion_orbits<F>(
    p: &Arc<Poset>,
    q: usize,
    packed_only: bool,
    opts: &CensusOptions,
    mut on_event: F,
) -> Result<()>
where
    F: FnMut(WalkEvent) -> ControlFlow<()>,
{
    let mut walker = OrbitWalker::new(p, q, opts.state_cap, opts.memory_cap);
    loop {
        let mut error: Option<Error> = None;
        let visit = |labels: &[u16]| -> ControlFlow<()> {
            match walker.consider(labels) {
                Ok(Some((size, least))) => {
                    if packed_only {
                        // packedness is invariant along the orbit; checking the
                        // least member catches a broken promotion step
                        let distinct = least.iter().collect::<HashSet<_>>().len();
                        if distinct != q {
                            error = Some(Error::Format(format!(
                                "orbit of a packed tableau left the packed set at q={q}"
                            )));
                            return ControlFlow::Break(());
                        }
                    }
                    on_event(WalkEvent::Orbit { size, least: &least })
                }
                Ok(None) => ControlFlow::Continue(()),
                Err(e) => {
                    error = Some(e);
                    ControlFlow::Break(())
                }
            }
        };
        let _ = if packed_only {
            for_each_packed_chainwise(p, q, visit)
        } else {
            enumerate_increasing(p, q, false, visit)
        };
        match error {
            None => return Ok(()),
            Some(Error::CapExceeded { .. }) if walker.take_restart_pending() => {
                if on_event(WalkEvent::Restart).is_break() {
                    return Ok(());
                }
            }
            Some(e) => return Err(e),
        }
    }
}

/// Exact orbit-size multiset of K-promotion at height `q`.
pub fn promotion_census(
    p: &Arc<Poset>,
    q: usize,
    packed_only: bool,
    opts: &CensusOptions,
) -> Result<Census> {
    let mut census = Census {
        param: CensusParam::PromotionHeight(q),
        packed_only,
        orbit_sizes: BTreeMap::new(),
        total: 0,
    };
    walk_promotion_orbits(p, q, packed_only, opts, |event| {
        match event {
            WalkEvent::Restart => {
                census.orbit_sizes.clear();
                census.total = 0;
            }
            WalkEvent::Orbit { size, .. } => census.record(size),
        }
        ControlFlow::Continue(())
    })?;
    Ok(census)
}

/// Exact orbit-size multiset of rowmotion on the ideals of `P x c`.
pub fn rowmotion_census(p: &Poset, c: usize, opts: &CensusOptions) -> Result<Census> {
    if c < 1 {
        return Err(Error::InvalidFamily("rowmotion census needs c >= 1".into()));
    }
    let product = Poset::product(p, &Poset::chain(c));
    rowmotion_census_on(&product, opts).map(|mut census| {
        census.param = CensusParam::RowmotionChain(c);
        census
    })
}

/// Rowmotion census directly on the ideals of a poset.
pub fn rowmotion_census_on(p: &Poset, opts: &CensusOptions) -> Result<Census> {
    let mut census = Census {
        param: CensusParam::RowmotionChain(1),
        packed_only: false,
        orbit_sizes: BTreeMap::new(),
        total: 0,
    };
    let mut visited: HashSet<ElemSet> = HashSet::new();
    let mut cap_hit = false;
    let flow = p.for_each_ideal(|seed| {
        if visited.contains(seed) {
            return ControlFlow::Continue(());
        }
        let mut members = vec![seed.clone()];
        let mut cur = rowmotion_set(p, seed);
        while &cur != seed {
            members.push(cur.clone());
            if visited.len() + members.len() > opts.state_cap as usize {
                cap_hit = true;
                return ControlFlow::Break(());
            }
            cur = rowmotion_set(p, &cur);
        }
        census.record(members.len() as u64);
        for m in members {
            visited.insert(m);
        }
        ControlFlow::Continue(())
    });
    if cap_hit || flow.is_break() {
        return Err(Error::CapExceeded {
            what: "rowmotion census states",
            cap: opts.state_cap,
        });
    }
    Ok(census)
}

/// Convenience wrapper returning representatives as tableaux.
pub fn promotion_orbit_representatives(
    p: &Arc<Poset>,
    q: usize,
    packed_only: bool,
    opts: &CensusOptions,
) -> Result<Vec<(u64, IncreasingTableau)>> {
    let mut out = Vec::new();
    walk_promotion_orbits(p, q, packed_only, opts, |event| {
        match event {
            WalkEvent::Restart => out.clear(),
            WalkEvent::Orbit { size, least } => out.push((
                size,
                IncreasingTableau::new(p, q, least.to_vec()).expect("orbit member is a tableau"),
            )),
        }
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Cross-check a census against the independent element-wise count.
pub fn census_conserves(p: &Arc<Poset>, q: usize, packed_only: bool, census: &Census) -> bool {
    census.conserves(count_increasing(p, q, packed_only))
}
