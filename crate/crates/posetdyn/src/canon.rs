//! Canonical labeling of posets and isomorphism testing.
//!
//! The canonical form is the cover list under the relabeling that minimizes
//! the cover matrix read in "staircase" order (entries (i,j) sorted by
//! max(i,j), then side). Candidate relabelings are restricted by an iterated
//! color refinement on (rank, height, degrees), and twin elements (identical
//! cover neighborhoods) are explored only once. Adequate for the sizes this
//! crate enumerates (up to a dozen-odd elements).

use crate::poset::Poset;

/// Stable color classes: dense color ranks invariant under relabeling,
/// refined iteratively from (rank, height, in/out degree) by neighbor color
/// multisets.
fn refine_colors(p: &Poset) -> Vec<u32> {
    let n = p.n();
    if n == 0 {
        return Vec::new();
    }
    let mut keys: Vec<(usize, usize, usize, usize)> = (0..n)
        .map(|x| {
            (
                p.elem_rank(x),
                p.elem_height(x),
                p.lower_covers(x).len(),
                p.upper_covers(x).len(),
            )
        })
        .collect();
    let mut colors = dense_ranks(&mut keys);
    loop {
        let mut round_keys: Vec<(u32, Vec<u32>, Vec<u32>)> = (0..n)
            .map(|x| {
                let mut lo: Vec<u32> =
                    p.lower_covers(x).iter().map(|&y| colors[y as usize]).collect();
                let mut hi: Vec<u32> =
                    p.upper_covers(x).iter().map(|&y| colors[y as usize]).collect();
                lo.sort_unstable();
                hi.sort_unstable();
                (colors[x], lo, hi)
            })
            .collect();
        let new_colors = dense_ranks(&mut round_keys);
        let stable = new_colors == colors;
        colors = new_colors;
        if stable {
            return colors;
        }
    }
}

fn dense_ranks<K: Ord + Clone>(keys: &mut [K]) -> Vec<u32> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).unwrap() as u32)
        .collect()
}

struct CanonSearch {
    n: usize,
    pos_color: Vec<u32>, // color owning each new position (grouped in blocks)
    colors: Vec<u32>,
    twin_class: Vec<u32>,
    adj: Vec<Vec<bool>>, // adj[a][b] = b covers a
    assigned: Vec<Option<u32>>, // new position -> old element
    used: Vec<bool>,
    best: Option<Vec<u8>>, // staircase-linearized cover matrix of best labeling
    cur: Vec<u8>,
    winning: Option<Vec<usize>>, // old -> new for the best labeling
}

impl CanonSearch {
    fn run(p: &Poset) -> Vec<usize> {
        let n = p.n();
        if n == 0 {
            return Vec::new();
        }
        let colors = refine_colors(p);
        let mut order: Vec<u32> = (0..n as u32).collect();
        order.sort_by_key(|&x| (colors[x as usize], x));
        let pos_color: Vec<u32> = order.iter().map(|&x| colors[x as usize]).collect();
        let mut twin_keys: Vec<(Vec<u32>, Vec<u32>)> = (0..n)
            .map(|x| {
                let mut lo = p.lower_covers(x).to_vec();
                let mut hi = p.upper_covers(x).to_vec();
                lo.sort_unstable();
                hi.sort_unstable();
                (lo, hi)
            })
            .collect();
        let twin_class = dense_ranks(&mut twin_keys);
        let mut adj = vec![vec![false; n]; n];
        for &(a, b) in p.covers() {
            adj[a as usize][b as usize] = true;
        }
        let mut search = CanonSearch {
            n,
            pos_color,
            colors,
            twin_class,
            adj,
            assigned: vec![None; n],
            used: vec![false; n],
            best: None,
            cur: Vec::with_capacity(n * n),
            winning: None,
        };
        search.place(0, false);
        search
            .winning
            .expect("canonical search explores at least one labeling")
    }

    fn place(&mut self, k: usize, strictly_less: bool) {
        if k == self.n {
            let better = match &self.best {
                None => true,
                Some(b) => strictly_less || self.cur < *b,
            };
            if better {
                self.best = Some(self.cur.clone());
                let mut perm = vec![0usize; self.n];
                for (pos, old) in self.assigned.iter().enumerate() {
                    perm[old.unwrap() as usize] = pos;
                }
                self.winning = Some(perm);
            }
            return;
        }
        let color = self.pos_color[k];
        let seg = 2 * k + 1;
        let base = self.cur.len();
        // Among twins only the least-indexed unassigned candidate is tried:
        // swapping two twins is an automorphism fixing everything else.
        let mut seen_twin: Vec<u32> = Vec::new();
        for e in 0..self.n {
            if self.used[e] || self.colors[e] != color {
                continue;
            }
            let t = self.twin_class[e];
            if seen_twin.contains(&t) {
                continue;
            }
            seen_twin.push(t);
            self.cur.truncate(base);
            for i in 0..k {
                let old_i = self.assigned[i].unwrap() as usize;
                self.cur.push(u8::from(self.adj[old_i][e]));
            }
            for j in 0..k {
                let old_j = self.assigned[j].unwrap() as usize;
                self.cur.push(u8::from(self.adj[e][old_j]));
            }
            self.cur.push(0); // diagonal entry
            debug_assert_eq!(self.cur.len() - base, seg);
            let mut child_strict = strictly_less;
            if !strictly_less {
                if let Some(b) = &self.best {
                    match self.cur[base..].cmp(&b[base..base + seg]) {
                        std::cmp::Ordering::Greater => continue,
                        std::cmp::Ordering::Less => child_strict = true,
                        std::cmp::Ordering::Equal => {}
                    }
                }
            }
            self.used[e] = true;
            self.assigned[k] = Some(e as u32);
            self.place(k + 1, child_strict);
            self.assigned[k] = None;
            self.used[e] = false;
        }
        self.cur.truncate(base);
    }
}

/// Relabeling `old -> new` that produces the canonical form.
pub fn canonical_relabeling(p: &Poset) -> Vec<usize> {
    CanonSearch::run(p)
}

/// Canonical cover list: equal for two posets iff they are isomorphic.
pub fn canonical_form(p: &Poset) -> Vec<(u32, u32)> {
    let perm = canonical_relabeling(p);
    let mut covers: Vec<(u32, u32)> = p
        .covers()
        .iter()
        .map(|&(a, b)| (perm[a as usize] as u32, perm[b as usize] as u32))
        .collect();
    covers.sort_unstable();
    covers
}

pub fn is_isomorphic(p: &Poset, q: &Poset) -> bool {
    if p.n() != q.n() || p.covers().len() != q.covers().len() {
        return false;
    }
    let mut cp = refine_colors(p);
    let mut cq = refine_colors(q);
    cp.sort_unstable();
    cq.sort_unstable();
    if cp != cq {
        return false;
    }
    canonical_form(p) == canonical_form(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rotations_of_chain4() -> Vec<Poset> {
        // two relabelings of the 4-chain
        vec![
            Poset::from_covers(4, &[(0, 1), (1, 2), (2, 3)]).unwrap(),
            Poset::from_covers(4, &[(3, 1), (1, 0), (0, 2)]).unwrap(),
        ]
    }

    #[test]
    fn relabelings_share_canonical_form() {
        let ps = rotations_of_chain4();
        assert_eq!(canonical_form(&ps[0]), canonical_form(&ps[1]));
        assert!(is_isomorphic(&ps[0], &ps[1]));
    }

    #[test]
    fn non_isomorphic_detected() {
        let d = Poset::product(&Poset::chain(2), &Poset::chain(2));
        let c = Poset::chain(4);
        assert!(!is_isomorphic(&d, &c));
        let v = Poset::from_covers(3, &[(0, 1), (0, 2)]).unwrap();
        let lam = v.dual();
        assert!(!is_isomorphic(&v, &lam));
        assert!(is_isomorphic(&v.dual(), &lam));
    }

    #[test]
    fn canonical_form_is_a_valid_cover_list() {
        let d = Poset::product(&Poset::chain(2), &Poset::chain(3));
        let form = canonical_form(&d);
        let rebuilt = Poset::from_covers(
            d.n(),
            &form.iter().map(|&(a, b)| (a as usize, b as usize)).collect::<Vec<_>>(),
        )
        .unwrap();
        assert!(is_isomorphic(&d, &rebuilt));
        assert_eq!(canonical_form(&rebuilt), form);
    }

    #[test]
    fn automorphism_heavy_posets_are_fast() {
        // antichains have a single twin class; the search must not blow up
        let a = Poset::antichain(12);
        assert!(canonical_form(&a).is_empty());
        let full = Poset::ordinal_sum(
            &Poset::ordinal_sum(&Poset::chain(1), &Poset::antichain(7)),
            &Poset::chain(1),
        );
        assert_eq!(canonical_form(&full).len(), full.covers().len());
    }

    #[test]
    fn isomorphism_is_an_equivalence() {
        let a = Poset::product(&Poset::chain(2), &Poset::chain(3));
        let b = a.relabel(&[5, 4, 3, 2, 1, 0]).unwrap();
        let c = b.relabel(&[2, 0, 1, 4, 5, 3]).unwrap();
        assert!(is_isomorphic(&a, &a));
        assert!(is_isomorphic(&a, &b) && is_isomorphic(&b, &a));
        assert!(is_isomorphic(&a, &b) && is_isomorphic(&b, &c) && is_isomorphic(&a, &c));
    }

    #[test]
    fn random_relabelings_invariant() {
        use rand::prelude::*;
        let mut rng = rand::rngs::StdRng::seed_from_u64(0xC0FFEE);
        let posets = [
            Poset::product(&Poset::chain(2), &Poset::chain(3)),
            Poset::ordinal_sum(&Poset::chain(2), &Poset::antichain(3)),
            Poset::from_covers(6, &[(0, 2), (1, 2), (2, 3), (3, 4), (3, 5)]).unwrap(),
        ];
        for p in &posets {
            let base = canonical_form(p);
            for _ in 0..100 {
                let mut perm: Vec<usize> = (0..p.n()).collect();
                perm.shuffle(&mut rng);
                let q = p.relabel(&perm).unwrap();
                assert_eq!(canonical_form(&q), base);
            }
        }
    }
}
