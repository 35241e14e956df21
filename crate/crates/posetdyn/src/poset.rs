//! Finite posets: construction from cover relations, combinators, rank data,
//! order ideals, comparability graphs, and autonomous subsets.

use std::ops::ControlFlow;
use std::sync::Arc;

use crate::bits::{BitMatrix, ElemSet};
use crate::error::{Error, Result};

/// Default cap on the number of ideals enumerated by [`Poset::enumerate_ideals`].
pub const DEFAULT_IDEAL_CAP: u64 = 10_000_000;
/// Default cap on the element count of an ideal lattice built as a poset.
pub const DEFAULT_LATTICE_CAP: u64 = 20_000;
/// Default element-count bound for exhaustive autonomous-subset enumeration.
pub const DEFAULT_AUTONOMOUS_LIMIT: usize = 16;

/// A finite partial order on elements `0..n`.
///
/// Stored as the cover relation (the transitive reduction) plus the dense
/// reachability relation `leq`. Values are immutable after construction and
/// may be shared freely across threads.
#[derive(Clone)]
pub struct Poset {
    n: usize,
    covers: Vec<(u32, u32)>,
    up: Vec<Vec<u32>>,   // upper covers of each element
    down: Vec<Vec<u32>>, // lower covers of each element
    leq: BitMatrix,      // leq[a][b] <=> a <= b
    topo: Vec<u32>,      // a fixed linear extension (by elem_rank, then index)
    elem_rank: Vec<usize>,
    name: Option<String>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.covers == other.covers
    }
}
impl Eq for Poset {}

impl std::hash::Hash for Poset {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.covers.hash(state);
    }
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poset(n={}, covers={:?}", self.n, self.covers)?;
        if let Some(name) = &self.name {
            write!(f, ", name={name}")?;
        }
        write!(f, ")")
    }
}

/// Rank information of a poset.
///
/// `elem_rank[x]` is the length (number of covers) of the longest chain with
/// maximum element `x`; `rank` is the maximum of these. The poset is graded
/// when some function is 0 on all minimal elements and increases by exactly 1
/// along every cover; such a function is unique and equals `elem_rank`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankData {
    pub is_graded: bool,
    pub rank: usize,
    pub elem_rank: Vec<usize>,
}

impl Poset {
    /// Build a poset from an arbitrary acyclic relation on `0..n`.
    ///
    /// The relation is closed transitively and then reduced to covers, so the
    /// input pairs need not themselves be covers.
    pub fn from_covers(n: usize, relations: &[(usize, usize)]) -> Result<Poset> {
        let mut m = BitMatrix::new(n);
        for &(a, b) in relations {
            if a >= n {
                return Err(Error::IndexOutOfRange { index: a, n });
            }
            if b >= n {
                return Err(Error::IndexOutOfRange { index: b, n });
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            m.set(a, b);
        }
        m.close_transitively();
        for a in 0..n {
            for b in a + 1..n {
                if m.get(a, b) && m.get(b, a) {
                    return Err(Error::CycleDetected);
                }
            }
        }
        Ok(Self::from_leq(n, m, None))
    }

    /// Internal: assemble from an already-closed `leq` matrix.
    fn from_leq(n: usize, leq: BitMatrix, name: Option<String>) -> Poset {
        // Transitive reduction: a < b is a cover iff no z with a < z < b.
        let mut covers = Vec::new();
        for a in 0..n {
            'pair: for b in 0..n {
                if a == b || !leq.get(a, b) {
                    continue;
                }
                for z in leq.row_iter(a) {
                    if z != a && z != b && leq.get(z, b) {
                        continue 'pair;
                    }
                }
                covers.push((a as u32, b as u32));
            }
        }
        covers.sort_unstable();
        Self::assemble(n, covers, leq, name)
    }

    fn assemble(n: usize, covers: Vec<(u32, u32)>, leq: BitMatrix, name: Option<String>) -> Poset {
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(a, b) in &covers {
            up[a as usize].push(b);
            down[b as usize].push(a);
        }
        // Longest chain (in covers) ending at each element, via a Kahn pass.
        let mut elem_rank = vec![0usize; n];
        let mut indeg: Vec<usize> = (0..n).map(|x| down[x].len()).collect();
        let mut queue: Vec<u32> = (0..n as u32).filter(|&x| indeg[x as usize] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        let mut qi = 0;
        while qi < queue.len() {
            let x = queue[qi];
            qi += 1;
            topo.push(x);
            for &y in &up[x as usize] {
                let r = elem_rank[x as usize] + 1;
                if r > elem_rank[y as usize] {
                    elem_rank[y as usize] = r;
                }
                indeg[y as usize] -= 1;
                if indeg[y as usize] == 0 {
                    queue.push(y);
                }
            }
        }
        // Fix the documented linear extension: sort by (elem_rank, index).
        topo.sort_by_key(|&x| (elem_rank[x as usize], x));
        Poset { n, covers, up, down, leq, topo, elem_rank, name }
    }

    /// A chain on `n` elements, `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Poset {
        let covers: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        let mut p = Poset::from_covers(n, &covers).expect("chain is a poset");
        p.name = Some(format!("chain:{n}"));
        p
    }

    /// An antichain on `n` pairwise-incomparable elements.
    pub fn antichain(n: usize) -> Poset {
        let mut p = Poset::from_covers(n, &[]).expect("antichain is a poset");
        p.name = Some(format!("antichain:{n}"));
        p
    }

    /// Cartesian product order. Element `(p, q)` gets index `p * |Q| + q`
    /// (P-major, then Q), and `(p,q) <= (p',q')` iff `p <= p'` and `q <= q'`.
    pub fn product(p: &Poset, q: &Poset) -> Poset {
        let n = p.n * q.n;
        let mut leq = BitMatrix::new(n);
        for a in 0..p.n {
            for b in 0..q.n {
                let i = a * q.n + b;
                for a2 in p.leq.row_iter(a) {
                    for b2 in q.leq.row_iter(b) {
                        leq.set(i, a2 * q.n + b2);
                    }
                }
            }
        }
        // Covers of a product: one coordinate covers, the other is equal.
        let mut covers = Vec::new();
        for &(a, a2) in &p.covers {
            for b in 0..q.n as u32 {
                covers.push((a * q.n as u32 + b, a2 * q.n as u32 + b));
            }
        }
        for &(b, b2) in &q.covers {
            for a in 0..p.n as u32 {
                covers.push((a * q.n as u32 + b, a * q.n as u32 + b2));
            }
        }
        covers.sort_unstable();
        Self::assemble(n, covers, leq, None)
    }

    /// Ordinal sum: every element of `p` below every element of `q`.
    /// `p` keeps indices `0..|p|`; `q` is shifted up by `|p|`.
    pub fn ordinal_sum(p: &Poset, q: &Poset) -> Poset {
        let n = p.n + q.n;
        let mut leq = BitMatrix::new(n);
        for a in 0..p.n {
            for b in p.leq.row_iter(a) {
                leq.set(a, b);
            }
            for b in 0..q.n {
                leq.set(a, p.n + b);
            }
        }
        for a in 0..q.n {
            for b in q.leq.row_iter(a) {
                leq.set(p.n + a, p.n + b);
            }
        }
        let mut covers: Vec<(u32, u32)> = p.covers.clone();
        covers.extend(
            q.covers
                .iter()
                .map(|&(a, b)| (a + p.n as u32, b + p.n as u32)),
        );
        for m in p.maximal_elements() {
            for m2 in q.minimal_elements() {
                covers.push((m as u32, (p.n + m2) as u32));
            }
        }
        covers.sort_unstable();
        Self::assemble(n, covers, leq, None)
    }

    /// Order-dual: all covers reversed, same index set.
    pub fn dual(&self) -> Poset {
        let mut leq = BitMatrix::new(self.n);
        for a in 0..self.n {
            for b in self.leq.row_iter(a) {
                leq.set(b, a);
            }
        }
        let mut covers: Vec<(u32, u32)> = self.covers.iter().map(|&(a, b)| (b, a)).collect();
        covers.sort_unstable();
        Self::assemble(self.n, covers, leq, None)
    }

    /// Apply a relabeling: element `i` becomes `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Poset> {
        if perm.len() != self.n {
            return Err(Error::Format(format!(
                "permutation length {} != {}",
                perm.len(),
                self.n
            )));
        }
        let covers: Vec<(usize, usize)> = self
            .covers
            .iter()
            .map(|&(a, b)| (perm[a as usize], perm[b as usize]))
            .collect();
        Poset::from_covers(self.n, &covers)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn covers(&self) -> &[(u32, u32)] {
        &self.covers
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Poset {
        self.name = Some(name.into());
        self
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq.get(a, b)
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq.get(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq.get(a, b) || self.leq.get(b, a)
    }

    pub fn upper_covers(&self, x: usize) -> &[u32] {
        &self.up[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[u32] {
        &self.down[x]
    }

    /// Number of elements `>= x` (including `x`).
    pub fn upset_size(&self, x: usize) -> usize {
        self.leq.row_count(x)
    }

    /// Number of elements `<= x` (including `x`).
    pub fn downset_size(&self, x: usize) -> usize {
        (0..self.n).filter(|&y| self.leq.get(y, x)).count()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.down[x].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.up[x].is_empty()).collect()
    }

    /// The fixed linear extension used by enumerations (by `elem_rank`, then index).
    pub fn linear_extension(&self) -> &[u32] {
        &self.topo
    }

    pub fn elem_rank(&self, x: usize) -> usize {
        self.elem_rank[x]
    }

    /// Length of the longest chain whose minimum is `x`.
    pub fn elem_height(&self, x: usize) -> usize {
        // Longest chain above x; recompute on demand (cheap at our sizes).
        let mut h = vec![0usize; self.n];
        for &e in self.topo.iter().rev() {
            let e = e as usize;
            h[e] = self.up[e]
                .iter()
                .map(|&y| h[y as usize] + 1)
                .max()
                .unwrap_or(0);
        }
        h[x]
    }

    pub fn rank_data(&self) -> RankData {
        let rank = self.elem_rank.iter().copied().max().unwrap_or(0);
        let is_graded = self
            .covers
            .iter()
            .all(|&(a, b)| self.elem_rank[b as usize] == self.elem_rank[a as usize] + 1);
        RankData {
            is_graded,
            rank,
            elem_rank: self.elem_rank.clone(),
        }
    }

    pub fn is_graded(&self) -> bool {
        self.rank_data().is_graded
    }

    pub fn rank(&self) -> usize {
        self.elem_rank.iter().copied().max().unwrap_or(0)
    }

    /// True when every maximal chain has the same length (the alternative
    /// reading of "graded"). For bounded posets this coincides with
    /// [`RankData::is_graded`].
    pub fn has_equal_maximal_chains(&self) -> bool {
        let r = self.rank();
        (0..self.n).all(|x| self.elem_rank[x] + self.elem_height(x) == r)
    }

    /// Unique minimum and unique maximum.
    pub fn is_bounded(&self) -> bool {
        self.n >= 1 && self.minimal_elements().len() == 1 && self.maximal_elements().len() == 1
    }

    /// Downward closure of a set of elements.
    pub fn down_closure(&self, seed: &ElemSet) -> ElemSet {
        let mut res = seed.clone();
        let mut stack: Vec<usize> = seed.iter().collect();
        while let Some(x) = stack.pop() {
            for &y in &self.down[x] {
                if !res.contains(y as usize) {
                    res.insert(y as usize);
                    stack.push(y as usize);
                }
            }
        }
        res
    }

    pub fn is_ideal(&self, s: &ElemSet) -> bool {
        s.iter().all(|x| self.down[x].iter().all(|&y| s.contains(y as usize)))
    }

    pub fn is_filter(&self, s: &ElemSet) -> bool {
        s.iter().all(|x| self.up[x].iter().all(|&y| s.contains(y as usize)))
    }

    /// Visit every order ideal exactly once, in a deterministic DFS order over
    /// the fixed linear extension. Return `Break` from the visitor to stop.
    pub fn for_each_ideal<F: FnMut(&ElemSet) -> ControlFlow<()>>(&self, mut f: F) -> ControlFlow<()> {
        // Iterative DFS: at position k we either include topo[k] (only when all
        // its lower covers are in) or exclude it. Every leaf is an ideal.
        fn rec<F: FnMut(&ElemSet) -> ControlFlow<()>>(
            p: &Poset,
            k: usize,
            cur: &mut ElemSet,
            f: &mut F,
        ) -> ControlFlow<()> {
            if k == p.n {
                return f(cur);
            }
            let e = p.topo[k] as usize;
            if p.down[e].iter().all(|&y| cur.contains(y as usize)) {
                cur.insert(e);
                rec(p, k + 1, cur, f)?;
                cur.remove(e);
            }
            rec(p, k + 1, cur, f)
        }
        let mut cur = ElemSet::empty(self.n);
        rec(self, 0, &mut cur, &mut f)
    }

    /// All order ideals, sorted by (size, word order). Errors when the count
    /// exceeds `cap`.
    pub fn enumerate_ideals_capped(&self, cap: u64) -> Result<Vec<ElemSet>> {
        let mut out = Vec::new();
        let overflow = self.for_each_ideal(|s| {
            if out.len() as u64 >= cap {
                return ControlFlow::Break(());
            }
            out.push(s.clone());
            ControlFlow::Continue(())
        });
        if overflow.is_break() {
            return Err(Error::CapExceeded { what: "ideal enumeration", cap });
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    pub fn enumerate_ideals(&self) -> Result<Vec<ElemSet>> {
        self.enumerate_ideals_capped(DEFAULT_IDEAL_CAP)
    }

    pub fn count_ideals(&self) -> u64 {
        let mut c = 0u64;
        let _ = self.for_each_ideal(|_| {
            c += 1;
            ControlFlow::Continue(())
        });
        c
    }

    /// Count ideals, giving up (with `None`) once `cap` is reached.
    pub fn count_ideals_capped(&self, cap: u64) -> Option<u64> {
        let mut c = 0u64;
        let flow = self.for_each_ideal(|_| {
            if c >= cap {
                return ControlFlow::Break(());
            }
            c += 1;
            ControlFlow::Continue(())
        });
        match flow {
            ControlFlow::Break(()) => None,
            ControlFlow::Continue(()) => Some(c),
        }
    }

    /// The lattice of order ideals as a poset, ordered by containment.
    ///
    /// Element `i` of the result is the `i`-th ideal in the order returned by
    /// [`Poset::enumerate_ideals`] (sorted by size then word order), which is a
    /// linear extension of containment.
    pub fn ideal_lattice_capped(&self, cap: u64) -> Result<Poset> {
        let ideals = self.enumerate_ideals_capped(cap)?;
        let n = ideals.len();
        let index: std::collections::HashMap<&ElemSet, usize> =
            ideals.iter().enumerate().map(|(i, s)| (s, i)).collect();
        // Covers in J(P) add exactly one element.
        let mut covers = Vec::new();
        for (i, s) in ideals.iter().enumerate() {
            for x in 0..self.n {
                if !s.contains(x) && self.down[x].iter().all(|&y| s.contains(y as usize)) {
                    let mut t = s.clone();
                    t.insert(x);
                    covers.push((i, index[&t]));
                }
            }
        }
        let mut leq = BitMatrix::new(n);
        for (i, s) in ideals.iter().enumerate() {
            for (j, t) in ideals.iter().enumerate() {
                if s.is_subset(t) {
                    leq.set(i, j);
                }
            }
        }
        let mut cov32: Vec<(u32, u32)> = covers.iter().map(|&(a, b)| (a as u32, b as u32)).collect();
        cov32.sort_unstable();
        Ok(Self::assemble(n, cov32, leq, None))
    }

    pub fn ideal_lattice(&self) -> Result<Poset> {
        self.ideal_lattice_capped(DEFAULT_LATTICE_CAP)
    }

    /// The undirected comparability graph.
    pub fn comparability_graph(&self) -> ComparabilityGraph {
        let mut edges = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.comparable(a, b) {
                    edges.push((a as u32, b as u32));
                }
            }
        }
        ComparabilityGraph { n: self.n, edges }
    }

    /// Is `a` an autonomous subset: every outside element relates to all of `a`
    /// uniformly?
    pub fn is_autonomous(&self, a: &ElemSet) -> bool {
        let members: Vec<usize> = a.iter().collect();
        if members.is_empty() {
            return true;
        }
        let first = members[0];
        for b in 0..self.n {
            if a.contains(b) {
                continue;
            }
            let below = self.lt(first, b);
            let above = self.lt(b, first);
            for &x in &members[1..] {
                if self.lt(x, b) != below || self.lt(b, x) != above {
                    return false;
                }
            }
        }
        true
    }

    /// All autonomous subsets with `2 <= |A| < n`. Exponential in `n`; bounded
    /// by `limit` elements (default 16 via [`Poset::autonomous_subsets`]).
    pub fn autonomous_subsets_with_limit(&self, limit: usize) -> Result<Vec<ElemSet>> {
        if self.n > limit.min(63) {
            return Err(Error::CapExceeded {
                what: "autonomous subset enumeration (element count)",
                cap: limit.min(63) as u64,
            });
        }
        let mut out = Vec::new();
        if self.n < 3 {
            return Ok(out);
        }
        for mask in 1u64..(1u64 << self.n) - 1 {
            if mask.count_ones() < 2 {
                continue;
            }
            let s = ElemSet::from_iter(self.n, (0..self.n).filter(|&i| mask >> i & 1 == 1));
            if self.is_autonomous(&s) {
                out.push(s);
            }
        }
        Ok(out)
    }

    pub fn autonomous_subsets(&self) -> Result<Vec<ElemSet>> {
        self.autonomous_subsets_with_limit(DEFAULT_AUTONOMOUS_LIMIT)
    }

    /// Reverse all relations inside the autonomous subset `a`, keeping every
    /// other relation. Involutive, and preserves the comparability graph.
    pub fn dualize_autonomous(&self, a: &ElemSet) -> Result<Poset> {
        if !self.is_autonomous(a) {
            return Err(Error::NotAutonomous);
        }
        let mut leq = BitMatrix::new(self.n);
        for x in 0..self.n {
            for y in 0..self.n {
                let rel = if x != y && a.contains(x) && a.contains(y) {
                    self.leq.get(y, x)
                } else {
                    self.leq.get(x, y)
                };
                if rel {
                    leq.set(x, y);
                }
            }
        }
        for i in 0..self.n {
            leq.set(i, i);
        }
        Ok(Self::from_leq(self.n, leq, None))
    }
}

/// An order ideal (downward-closed subset) of a shared poset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderIdeal {
    poset: Arc<Poset>,
    members: ElemSet,
}

impl OrderIdeal {
    pub fn new(poset: &Arc<Poset>, members: ElemSet) -> Result<OrderIdeal> {
        if !poset.is_ideal(&members) {
            return Err(Error::NotAnIdeal);
        }
        Ok(OrderIdeal { poset: Arc::clone(poset), members })
    }

    pub fn empty(poset: &Arc<Poset>) -> OrderIdeal {
        OrderIdeal {
            poset: Arc::clone(poset),
            members: ElemSet::empty(poset.n()),
        }
    }

    pub fn full(poset: &Arc<Poset>) -> OrderIdeal {
        OrderIdeal {
            poset: Arc::clone(poset),
            members: ElemSet::full(poset.n()),
        }
    }

    pub fn poset(&self) -> &Arc<Poset> {
        &self.poset
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Undirected comparability graph of a poset, with edges sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparabilityGraph {
    pub n: usize,
    pub edges: Vec<(u32, u32)>,
}

impl ComparabilityGraph {
    pub fn is_edge(&self, a: u32, b: u32) -> bool {
        let e = if a < b { (a, b) } else { (b, a) };
        self.edges.binary_search(&e).is_ok()
    }
}
