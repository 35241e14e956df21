//! JSON interchange formats and DOT export.
//!
//! Poset JSON: `{"n": <int>, "covers": [[a,b],...], "name": <optional>}`.
//! The covers field may be any acyclic relation; it is reduced on load.
//!
//! Tableau JSON: `{"poset": <poset object or file path>, "q": <int>,
//! "labels": [<int per element>]}`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::minuscule::trees;
use crate::poset::Poset;
use crate::tableau::IncreasingTableau;

#[derive(Serialize, Deserialize)]
struct PosetJson {
    n: usize,
    covers: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
}

pub fn parse_poset(text: &str) -> Result<Poset> {
    let pj: PosetJson = serde_json::from_str(text)?;
    let mut p = Poset::from_covers(pj.n, &pj.covers)?;
    if let Some(name) = pj.name {
        p = p.with_name(name);
    }
    Ok(p)
}

pub fn serialize_poset(p: &Poset) -> String {
    let pj = PosetJson {
        n: p.n(),
        covers: p.covers().iter().map(|&(a, b)| (a as usize, b as usize)).collect(),
        name: p.name().map(str::to_string),
    };
    serde_json::to_string(&pj).expect("poset serializes")
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum PosetField {
    Inline(PosetJson),
    Path(String),
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    poset: PosetField,
    q: usize,
    labels: Vec<i64>,
}

/// Parse a tableau; a string `poset` field is read as a file path.
pub fn parse_tableau(text: &str) -> Result<IncreasingTableau> {
    let tj: TableauJson = serde_json::from_str(text)?;
    let poset = match tj.poset {
        PosetField::Inline(pj) => {
            let mut p = Poset::from_covers(pj.n, &pj.covers)?;
            if let Some(name) = pj.name {
                p = p.with_name(name);
            }
            p
        }
        PosetField::Path(path) => parse_poset(&std::fs::read_to_string(path)?)?,
    };
    let mut labels = Vec::with_capacity(tj.labels.len());
    for &l in &tj.labels {
        if l < 1 || l > tj.q as i64 || l > u16::MAX as i64 {
            return Err(Error::LabelOutOfRange { label: l, q: tj.q });
        }
        labels.push(l as u16);
    }
    IncreasingTableau::new(&Arc::new(poset), tj.q, labels)
}

pub fn serialize_tableau(t: &IncreasingTableau) -> String {
    let tj = TableauJson {
        poset: PosetField::Inline(PosetJson {
            n: t.poset().n(),
            covers: t
                .poset()
                .covers()
                .iter()
                .map(|&(a, b)| (a as usize, b as usize))
                .collect(),
            name: t.poset().name().map(str::to_string),
        }),
        q: t.q(),
        labels: t.labels().iter().map(|&l| l as i64).collect(),
    };
    serde_json::to_string(&tj).expect("tableau serializes")
}

/// Options for [`export_dot`].
#[derive(Default)]
pub struct DotOptions<'a> {
    /// Color nodes by doubletree membership: bottom tree red, top tree blue,
    /// their intersection purple, everything else black.
    pub color_doubletree: bool,
    /// Show these labels next to element indices.
    pub tableau: Option<&'a IncreasingTableau>,
}

/// Render the cover relation as a DOT digraph ranked by element rank.
pub fn export_dot(p: &Poset, opts: &DotOptions) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let name = p.name().unwrap_or("poset");
    writeln!(out, "digraph \"{name}\" {{").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=circle, fontsize=10];").unwrap();
    let decomposition = opts.color_doubletree.then(|| trees(p));
    for x in 0..p.n() {
        let mut attrs = Vec::new();
        let label = match opts.tableau {
            Some(t) => format!("{}:{}", x, t.label(x)),
            None => format!("{x}"),
        };
        attrs.push(format!("label=\"{label}\""));
        if let Some(t) = &decomposition {
            let b = t.bottom_tree.contains(x);
            let u = t.top_tree.contains(x);
            let color = match (b, u) {
                (true, true) => "purple",
                (true, false) => "red",
                (false, true) => "blue",
                (false, false) => "black",
            };
            attrs.push(format!("style=filled, fillcolor={color}, fontcolor=white"));
        }
        writeln!(out, "  v{} [{}];", x, attrs.join(", ")).unwrap();
    }
    // keep elements of equal rank on one level
    let rd = p.rank_data();
    for r in 0..=rd.rank {
        let same: Vec<String> = (0..p.n())
            .filter(|&x| rd.elem_rank[x] == r)
            .map(|x| format!("v{x}"))
            .collect();
        if same.len() > 1 {
            writeln!(out, "  {{ rank=same; {}; }}", same.join("; ")).unwrap();
        }
    }
    for &(a, b) in p.covers() {
        writeln!(out, "  v{a} -> v{b};").unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minuscule::{minuscule, MinusculeFamily};

    #[test]
    fn poset_round_trip() {
        let p = Poset::from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)])
            .unwrap()
            .with_name("diamond");
        let s = serialize_poset(&p);
        let back = parse_poset(&s).unwrap();
        assert_eq!(back, p);
        assert_eq!(back.name(), Some("diamond"));
        assert_eq!(serialize_poset(&back), s);
    }

    #[test]
    fn relations_reduced_on_load() {
        let text = r#"{"n":3,"covers":[[0,1],[1,2],[0,2]]}"#;
        let p = parse_poset(text).unwrap();
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn bad_inputs_rejected() {
        assert!(parse_poset(r#"{"n":2,"covers":[[0,1],[1,0]]}"#).is_err());
        assert!(parse_poset(r#"{"n":1,"covers":[[0,3]]}"#).is_err());
        assert!(parse_poset("not json").is_err());
        // tableau with label 0 rejected
        let t = r#"{"poset":{"n":2,"covers":[[0,1]]},"q":2,"labels":[0,1]}"#;
        assert!(matches!(
            parse_tableau(t),
            Err(Error::LabelOutOfRange { label: 0, .. })
        ));
        // non-increasing labels rejected
        let t = r#"{"poset":{"n":2,"covers":[[0,1]]},"q":2,"labels":[2,1]}"#;
        assert!(matches!(parse_tableau(t), Err(Error::NotIncreasing { .. })));
    }

    #[test]
    fn tableau_round_trip() {
        let t = r#"{"poset":{"n":2,"covers":[[0,1]]},"q":3,"labels":[1,3]}"#;
        let tab = parse_tableau(t).unwrap();
        assert_eq!(tab.labels(), &[1, 3]);
        let again = parse_tableau(&serialize_tableau(&tab)).unwrap();
        assert_eq!(again, tab);
    }

    #[test]
    fn dot_export_counts() {
        let c = Poset::chain(3);
        let dot = export_dot(&c, &DotOptions::default());
        assert_eq!(dot.matches("->").count(), 2);
        assert_eq!(dot.matches("[label=").count(), 3);
        // propeller: colored export has no black nodes
        let p = minuscule(&MinusculeFamily::Propeller { k: 3 }).unwrap();
        let dot = export_dot(
            &p,
            &DotOptions {
                color_doubletree: true,
                tableau: None,
            },
        );
        assert!(!dot.contains("fillcolor=black"));
        // rect 3x5 has exactly 3 black nodes
        let r = minuscule(&MinusculeFamily::Rectangle { a: 3, b: 5 }).unwrap();
        let dot = export_dot(
            &r,
            &DotOptions {
                color_doubletree: true,
                tableau: None,
            },
        );
        assert_eq!(dot.matches("fillcolor=black").count(), 3);
    }
}
