//! The five minuscule families, the order-reversing self-duality of each,
//! bottom/top trees and doubletrees, minimal tableaux, and the
//! doubling/radical maps between staircases and square rectangles.

use std::sync::{Arc, OnceLock};

use crate::bits::ElemSet;
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::tableau::IncreasingTableau;

/// The five families. Rectangles `a x b` include all chains (`a = 1`);
/// `propeller(k)` is the k-fold ideal lattice of the 2x2 rectangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinusculeFamily {
    Rectangle { a: usize, b: usize },
    Staircase { n: usize },
    Propeller { k: usize },
    CayleyMoufang,
    Freudenthal,
}

impl MinusculeFamily {
    /// Parse the CLI spelling: `rect:AxB`, `staircase:N`, `propeller:K`,
    /// `cayley-moufang`, `freudenthal`.
    pub fn parse(s: &str) -> Option<MinusculeFamily> {
        if let Some(rest) = s.strip_prefix("rect:") {
            let (a, b) = rest.split_once('x')?;
            return Some(MinusculeFamily::Rectangle {
                a: a.parse().ok()?,
                b: b.parse().ok()?,
            });
        }
        if let Some(rest) = s.strip_prefix("staircase:") {
            return Some(MinusculeFamily::Staircase { n: rest.parse().ok()? });
        }
        if let Some(rest) = s.strip_prefix("propeller:") {
            return Some(MinusculeFamily::Propeller { k: rest.parse().ok()? });
        }
        match s {
            "cayley-moufang" => Some(MinusculeFamily::CayleyMoufang),
            "freudenthal" => Some(MinusculeFamily::Freudenthal),
            _ => None,
        }
    }

    pub fn cli_name(&self) -> String {
        match self {
            MinusculeFamily::Rectangle { a, b } => format!("rect:{a}x{b}"),
            MinusculeFamily::Staircase { n } => format!("staircase:{n}"),
            MinusculeFamily::Propeller { k } => format!("propeller:{k}"),
            MinusculeFamily::CayleyMoufang => "cayley-moufang".to_string(),
            MinusculeFamily::Freudenthal => "freudenthal".to_string(),
        }
    }
}

/// Index of the rectangle element `(x, y)`, 1-based coordinates, P-major.
pub fn rectangle_index(b: usize, x: usize, y: usize) -> usize {
    (x - 1) * b + (y - 1)
}

/// Index of the staircase element `(x, y)` with `1 <= x <= y <= n`,
/// enumerated in lexicographic order.
pub fn staircase_index(n: usize, x: usize, y: usize) -> usize {
    // row x (1-based) starts after rows 1..x-1, of lengths n, n-1, ...
    (x - 1) * (2 * n + 2 - x) / 2 + (y - x)
}

pub fn staircase_coords(n: usize, mut idx: usize) -> (usize, usize) {
    let mut x = 1;
    while idx >= n - x + 1 {
        idx -= n - x + 1;
        x += 1;
    }
    (x, x + idx)
}

/// Build a minuscule poset. The exceptional posets are built once via the
/// iterated ideal lattice and cached for the process lifetime; their element
/// order is the pinned enumeration order of the construction.
pub fn minuscule(family: &MinusculeFamily) -> Result<Poset> {
    match *family {
        MinusculeFamily::Rectangle { a, b } => {
            if a < 1 || b < 1 {
                return Err(Error::InvalidFamily(format!("rect:{a}x{b} needs a, b >= 1")));
            }
            Ok(Poset::product(&Poset::chain(a), &Poset::chain(b))
                .with_name(format!("rect:{a}x{b}")))
        }
        MinusculeFamily::Staircase { n } => {
            if n < 1 {
                return Err(Error::InvalidFamily("staircase needs n >= 1".into()));
            }
            Ok(staircase(n))
        }
        MinusculeFamily::Propeller { k } => {
            let mut p = Poset::product(&Poset::chain(2), &Poset::chain(2));
            for _ in 0..k {
                p = p.ideal_lattice()?;
            }
            Ok(p.with_name(format!("propeller:{k}")))
        }
        MinusculeFamily::CayleyMoufang => {
            static CM: OnceLock<Poset> = OnceLock::new();
            Ok(CM
                .get_or_init(|| {
                    exceptional_from_cache("cayley-moufang", 2)
                        .with_name("cayley-moufang".to_string())
                })
                .clone())
        }
        MinusculeFamily::Freudenthal => {
            static FR: OnceLock<Poset> = OnceLock::new();
            Ok(FR
                .get_or_init(|| {
                    exceptional_from_cache("freudenthal", 3)
                        .with_name("freudenthal".to_string())
                })
                .clone())
        }
    }
}

/// The set `{(x, y) : x <= y in [n]}` under entrywise comparison.
fn staircase(n: usize) -> Poset {
    let size = n * (n + 1) / 2;
    let mut covers = Vec::new();
    for x in 1..=n {
        for y in x..=n {
            let i = staircase_index(n, x, y);
            if y + 1 <= n {
                covers.push((i, staircase_index(n, x, y + 1)));
            }
            if x + 1 <= y {
                covers.push((i, staircase_index(n, x + 1, y)));
            }
        }
    }
    Poset::from_covers(size, &covers)
        .expect("staircase is a poset")
        .with_name(format!("staircase:{n}"))
}

/// Iterated ideal lattice of 3x2, optionally served from the cache directory
/// named by `POSETDYN_CACHE_DIR`.
fn exceptional_from_cache(name: &str, iterations: usize) -> Poset {
    let build = || {
        let mut p = Poset::product(&Poset::chain(3), &Poset::chain(2));
        for _ in 0..iterations {
            p = p.ideal_lattice().expect("small lattice");
        }
        p
    };
    let Some(dir) = std::env::var_os("POSETDYN_CACHE_DIR") else {
        return build();
    };
    let path = std::path::Path::new(&dir).join(format!("{name}.json"));
    if let Ok(text) = std::fs::read_to_string(&path) {
        if let Ok(p) = crate::io::parse_poset(&text) {
            let fresh = build();
            if p == fresh {
                return p;
            }
        }
    }
    let fresh = build();
    let _ = std::fs::create_dir_all(&dir)
        .and_then(|_| std::fs::write(&path, crate::io::serialize_poset(&fresh)));
    fresh
}

/// An order-reversing involutive permutation of a poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntiAutomorphism {
    poset: Arc<Poset>,
    perm: Vec<u32>,
}

impl AntiAutomorphism {
    pub fn new(poset: &Arc<Poset>, perm: Vec<u32>) -> Result<AntiAutomorphism> {
        let n = poset.n();
        if perm.len() != n {
            return Err(Error::Format(format!("permutation length {} != {n}", perm.len())));
        }
        let mut seen = vec![false; n];
        for &v in &perm {
            if v as usize >= n || seen[v as usize] {
                return Err(Error::Format("not a permutation".into()));
            }
            seen[v as usize] = true;
        }
        for x in 0..n {
            if perm[perm[x] as usize] as usize != x {
                return Err(Error::Format("not an involution".into()));
            }
        }
        for x in 0..n {
            for y in 0..n {
                if poset.leq(x, y) != poset.leq(perm[y] as usize, perm[x] as usize) {
                    return Err(Error::Format("not order-reversing".into()));
                }
            }
        }
        Ok(AntiAutomorphism {
            poset: Arc::clone(poset),
            perm,
        })
    }

    pub fn poset(&self) -> &Arc<Poset> {
        &self.poset
    }

    pub fn apply(&self, x: usize) -> usize {
        self.perm[x] as usize
    }

    pub fn perm(&self) -> &[u32] {
        &self.perm
    }
}

/// Enumerate every order-reversing involution of `p`. Backtracks over
/// elements with rank/degree pruning; feasible well past the exceptional
/// poset sizes.
pub fn order_reversing_involutions(p: &Poset) -> Vec<Vec<u32>> {
    let n = p.n();
    let mut out = Vec::new();
    let mut perm: Vec<Option<u32>> = vec![None; n];
    // invariant key that must be swapped under any anti-automorphism
    let key: Vec<(usize, usize, usize, usize)> = (0..n)
        .map(|x| {
            (
                p.elem_rank(x),
                p.elem_height(x),
                p.lower_covers(x).len(),
                p.upper_covers(x).len(),
            )
        })
        .collect();
    // Order reversal of the candidate assignment sigma(a) = b against every
    // already-assigned pair (z, w): a <= z iff w <= b, and z <= a iff b <= w.
    // The mutual constraint of a transposition (x y) is automatic.
    fn compatible(p: &Poset, perm: &[Option<u32>], a: usize, b: usize) -> bool {
        for (z, assigned) in perm.iter().enumerate() {
            let Some(w) = assigned else { continue };
            let w = *w as usize;
            if p.leq(a, z) != p.leq(w, b) || p.leq(z, a) != p.leq(b, w) {
                return false;
            }
        }
        true
    }
    fn rec(
        p: &Poset,
        key: &[(usize, usize, usize, usize)],
        perm: &mut Vec<Option<u32>>,
        out: &mut Vec<Vec<u32>>,
    ) {
        let n = p.n();
        let Some(x) = (0..n).find(|&x| perm[x].is_none()) else {
            out.push(perm.iter().map(|v| v.unwrap()).collect());
            return;
        };
        for y in 0..n {
            if y != x && perm[y].is_some() {
                continue;
            }
            // sigma swaps rank with height and in- with out-degree
            let (rx, hx, dx, ux) = key[x];
            let (ry, hy, dy, uy) = key[y];
            if (rx, hx, dx, ux) != (hy, ry, uy, dy) {
                continue;
            }
            if !compatible(p, perm, x, y) || (x != y && !compatible(p, perm, y, x)) {
                continue;
            }
            perm[x] = Some(y as u32);
            perm[y] = Some(x as u32);
            rec(p, key, perm, out);
            perm[x] = None;
            if y != x {
                perm[y] = None;
            }
        }
    }
    rec(p, &key, &mut perm, &mut out);
    out
}

/// The self-duality of a minuscule poset.
///
/// For rectangles it is the 180-degree rotation `(x,y) -> (a+1-x, b+1-y)`;
/// for staircases the reflection `(x,y) -> (n+1-y, n+1-x)`; for propellers the
/// rank-complementing reflection fixing each middle-antichain element. For the
/// exceptional posets (and for arbitrary self-dual posets when no hint is
/// given) the involution is found by search; when several exist the
/// lexicographically least permutation word is chosen.
pub fn pd_map(p: &Arc<Poset>, hint: Option<&MinusculeFamily>) -> Result<AntiAutomorphism> {
    Ok(pd_map_detailed(p, hint)?.0)
}

/// As [`pd_map`], also reporting how many order-reversing involutions exist
/// (1 when a family formula was used without search).
pub fn pd_map_detailed(
    p: &Arc<Poset>,
    hint: Option<&MinusculeFamily>,
) -> Result<(AntiAutomorphism, usize)> {
    match hint {
        Some(MinusculeFamily::Rectangle { a, b }) => {
            let mut perm = vec![0u32; p.n()];
            for x in 1..=*a {
                for y in 1..=*b {
                    perm[rectangle_index(*b, x, y)] =
                        rectangle_index(*b, a + 1 - x, b + 1 - y) as u32;
                }
            }
            Ok((AntiAutomorphism::new(p, perm)?, 1))
        }
        Some(MinusculeFamily::Staircase { n }) => {
            let mut perm = vec![0u32; p.n()];
            for x in 1..=*n {
                for y in x..=*n {
                    perm[staircase_index(*n, x, y)] =
                        staircase_index(*n, n + 1 - y, n + 1 - x) as u32;
                }
            }
            Ok((AntiAutomorphism::new(p, perm)?, 1))
        }
        Some(MinusculeFamily::Propeller { .. }) => {
            // chain elements pair up by complementary rank; the two middle
            // elements (the unique rank of size 2) stay fixed
            let rd = p.rank_data();
            let mut by_rank: Vec<Vec<u32>> = vec![Vec::new(); rd.rank + 1];
            for x in 0..p.n() {
                by_rank[rd.elem_rank[x]].push(x as u32);
            }
            let mut perm = vec![0u32; p.n()];
            for x in 0..p.n() {
                let r = rd.elem_rank[x];
                if by_rank[r].len() == 2 {
                    perm[x] = x as u32;
                } else {
                    perm[x] = by_rank[rd.rank - r][0];
                }
            }
            Ok((AntiAutomorphism::new(p, perm)?, 1))
        }
        _ => {
            let found = order_reversing_involutions(p);
            let count = found.len();
            let Some(least) = found.into_iter().min() else {
                return Err(Error::NoAntiInvolution);
            };
            Ok((AntiAutomorphism::new(p, least)?, count))
        }
    }
}

/// Bottom tree (elements whose principal ideal is a chain), top tree (dually),
/// and their union the doubletree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub bottom_tree: ElemSet,
    pub top_tree: ElemSet,
    pub doubletree: ElemSet,
}

pub fn trees(p: &Poset) -> TreeDecomposition {
    let n = p.n();
    let mut bottom = ElemSet::empty(n);
    let mut top = ElemSet::empty(n);
    for x in 0..n {
        // the down-set of x is a chain iff its size is elem_rank(x) + 1
        if p.downset_size(x) == p.elem_rank(x) + 1 {
            bottom.insert(x);
        }
        if p.upset_size(x) == p.elem_height(x) + 1 {
            top.insert(x);
        }
    }
    let mut doubletree = bottom.clone();
    doubletree.union_with(&top);
    TreeDecomposition {
        bottom_tree: bottom,
        top_tree: top,
        doubletree,
    }
}

/// The unique increasing tableau of height `rank + 1` on a graded poset:
/// every element is labeled by its rank plus one.
pub fn minimal_tableau(p: &Arc<Poset>) -> Result<IncreasingTableau> {
    let rd = p.rank_data();
    if !rd.is_graded {
        return Err(Error::NotGraded);
    }
    let labels: Vec<u16> = rd.elem_rank.iter().map(|&r| r as u16 + 1).collect();
    IncreasingTableau::new(p, rd.rank + 1, labels)
}

/// Glue two copies of a staircase tableau into a symmetric tableau on the
/// square rectangle: `T2(x,y) = T2(y,x) = T(x,y)` for `x <= y`.
pub fn doubling(t: &IncreasingTableau) -> Result<IncreasingTableau> {
    let size = t.poset().n();
    // size = k(k+1)/2
    let k = (0..).find(|k| k * (k + 1) / 2 >= size).unwrap();
    if k * (k + 1) / 2 != size
        || t.poset().as_ref() != &minuscule(&MinusculeFamily::Staircase { n: k })?
    {
        return Err(Error::ShapeMismatch(
            "doubling needs a tableau on a staircase".into(),
        ));
    }
    let rect = Arc::new(minuscule(&MinusculeFamily::Rectangle { a: k, b: k })?);
    let mut labels = vec![0u16; k * k];
    for x in 1..=k {
        for y in x..=k {
            let v = t.label(staircase_index(k, x, y));
            labels[rectangle_index(k, x, y)] = v;
            labels[rectangle_index(k, y, x)] = v;
        }
    }
    IncreasingTableau::new(&rect, t.q(), labels)
}

/// Restrict a symmetric tableau on the square rectangle `k x k` to the pairs
/// `x <= y`, producing a staircase tableau.
pub fn radical(u: &IncreasingTableau) -> Result<IncreasingTableau> {
    let size = u.poset().n();
    let k = (0..).find(|k| k * k >= size).unwrap();
    if k * k != size || u.poset().as_ref() != &minuscule(&MinusculeFamily::Rectangle { a: k, b: k })? {
        return Err(Error::ShapeMismatch(
            "radical needs a tableau on a square rectangle".into(),
        ));
    }
    for x in 1..=k {
        for y in x + 1..=k {
            if u.label(rectangle_index(k, x, y)) != u.label(rectangle_index(k, y, x)) {
                return Err(Error::NotSymmetric { x, y });
            }
        }
    }
    let stair = Arc::new(minuscule(&MinusculeFamily::Staircase { n: k })?);
    let mut labels = vec![0u16; k * (k + 1) / 2];
    for x in 1..=k {
        for y in x..=k {
            labels[staircase_index(k, x, y)] = u.label(rectangle_index(k, x, y));
        }
    }
    IncreasingTableau::new(&stair, u.q(), labels)
}
