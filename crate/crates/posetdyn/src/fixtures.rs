//! Named test posets with hand-pinned cover lists, plus the spec grammar for
//! building posets on the command line.

use crate::error::{Error, Result};
use crate::minuscule::{minuscule, MinusculeFamily};
use crate::poset::Poset;

/// A named poset with a one-line description of where its covers come from.
pub struct Fixture {
    pub name: &'static str,
    pub note: &'static str,
    pub poset: Poset,
}

/// The 10-element "bee hummingbird" poset: the smallest bird-family d-complete
/// poset, graded of rank 4, and the standard small example of a d-complete
/// poset without NRP rowmotion. Covers listed bottom-up by rank.
pub fn bee_hummingbird() -> Poset {
    let covers = [
        (0, 1),
        (1, 2),
        (1, 4),
        (2, 3),
        (2, 5),
        (4, 5),
        (4, 7),
        (3, 6),
        (5, 6),
        (5, 8),
        (5, 9),
        (7, 8),
    ];
    Poset::from_covers(10, &covers)
        .expect("valid covers")
        .with_name("bee-hummingbird")
}

/// N' = 1 + 3-antichain + 1: the 5-element graded poset whose packed
/// promotion orbits drive the NRP behavior of N.
pub fn poset_n_prime() -> Poset {
    Poset::ordinal_sum(
        &Poset::ordinal_sum(&Poset::chain(1), &Poset::antichain(3)),
        &Poset::chain(1),
    )
    .with_name("N-prime")
}

/// N = N' + chain 4: a 9-element non-minuscule poset with NRP rowmotion.
pub fn poset_n() -> Poset {
    Poset::ordinal_sum(&poset_n_prime(), &Poset::chain(4)).with_name("N")
}

/// W: the other 9-element non-minuscule NRP poset (up to duality).
/// Covers hand-pinned; graded of rank 4, bounded.
pub fn poset_w() -> Poset {
    let covers = [
        (0, 1),
        (0, 2),
        (0, 4),
        (1, 3),
        (1, 5),
        (2, 3),
        (4, 5),
        (3, 6),
        (3, 7),
        (5, 6),
        (6, 8),
        (7, 8),
    ];
    Poset::from_covers(9, &covers)
        .expect("valid covers")
        .with_name("W")
}

/// The cube 2x2x2 = (2x2) x 2: the standard witness that products of NRP
/// posets need not be NRP.
pub fn cube() -> Poset {
    Poset::product(
        &Poset::product(&Poset::chain(2), &Poset::chain(2)),
        &Poset::chain(2),
    )
    .with_name("cube")
}

/// Tableau labels of the cube witness whose promotion orbit at height 7 has
/// 27 members: bottom 1, atoms 2/3/4, the coatom over the 3- and 4-atoms
/// labeled 6, the other two coatoms 5, top 7.
pub fn cube_witness_labels() -> Vec<u16> {
    vec![1, 2, 3, 5, 4, 5, 6, 7]
}

pub fn all_fixtures() -> Vec<Fixture> {
    let mut out = vec![
        Fixture {
            name: "bee-hummingbird",
            note: "10-element bird-family d-complete poset, rank 4",
            poset: bee_hummingbird(),
        },
        Fixture {
            name: "N-prime",
            note: "1 + 3-antichain + 1",
            poset: poset_n_prime(),
        },
        Fixture {
            name: "N",
            note: "N-prime + chain 4",
            poset: poset_n(),
        },
        Fixture {
            name: "W",
            note: "9-element NRP poset, hand-pinned covers",
            poset: poset_w(),
        },
        Fixture {
            name: "cube",
            note: "2x2x2 product of chains",
            poset: cube(),
        },
    ];
    for fam in [
        MinusculeFamily::Rectangle { a: 3, b: 5 },
        MinusculeFamily::Staircase { n: 5 },
        MinusculeFamily::Propeller { k: 3 },
        MinusculeFamily::CayleyMoufang,
        MinusculeFamily::Freudenthal,
    ] {
        out.push(Fixture {
            name: match fam {
                MinusculeFamily::Rectangle { .. } => "rect:3x5",
                MinusculeFamily::Staircase { .. } => "staircase:5",
                MinusculeFamily::Propeller { .. } => "propeller:3",
                MinusculeFamily::CayleyMoufang => "cayley-moufang",
                MinusculeFamily::Freudenthal => "freudenthal",
            },
            note: "minuscule family example",
            poset: minuscule(&fam).expect("valid family"),
        });
    }
    out
}

pub fn fixture(name: &str) -> Option<Poset> {
    match name {
        "bee-hummingbird" | "H" => Some(bee_hummingbird()),
        "N" => Some(poset_n()),
        "N-prime" | "N'" => Some(poset_n_prime()),
        "W" => Some(poset_w()),
        "cube" => Some(cube()),
        _ => None,
    }
}

/// Grammar for poset specs on the command line:
///
/// ```text
/// SPEC  := TERM ('+' TERM)*          ordinal sum
/// TERM  := ATOM ('*' ATOM)*          product
/// ATOM  := 'chain:N' | 'antichain:N' | 'rect:AxB' | 'staircase:N'
///        | 'propeller:K' | 'cayley-moufang' | 'freudenthal' | 'P:a,b'
///        | fixture name | 'dual(' SPEC ')' | 'J(' SPEC ')' | '(' SPEC ')'
/// ```
pub fn parse_spec(s: &str) -> Result<Poset> {
    let mut parser = SpecParser { s, pos: 0 };
    let p = parser.spec()?;
    parser.skip_ws();
    if parser.pos != s.len() {
        return Err(Error::UnknownSpec(s.to_string()));
    }
    Ok(p)
}

struct SpecParser<'a> {
    s: &'a str,
    pos: usize,
}

impl<'a> SpecParser<'a> {
    fn skip_ws(&mut self) {
        while self.s[self.pos..].starts_with(' ') {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.s[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn spec(&mut self) -> Result<Poset> {
        let mut p = self.term()?;
        while self.eat('+') {
            let q = self.term()?;
            p = Poset::ordinal_sum(&p, &q);
        }
        Ok(p)
    }

    fn term(&mut self) -> Result<Poset> {
        let mut p = self.atom()?;
        while self.eat('*') {
            let q = self.atom()?;
            p = Poset::product(&p, &q);
        }
        Ok(p)
    }

    fn atom(&mut self) -> Result<Poset> {
        self.skip_ws();
        if self.eat('(') {
            let p = self.spec()?;
            if !self.eat(')') {
                return Err(Error::UnknownSpec(self.s.to_string()));
            }
            return Ok(p);
        }
        let rest = &self.s[self.pos..];
        for prefix in ["dual(", "J("] {
            if let Some(inner_start) = rest.strip_prefix(prefix).map(|_| self.pos + prefix.len()) {
                self.pos = inner_start;
                let p = self.spec()?;
                if !self.eat(')') {
                    return Err(Error::UnknownSpec(self.s.to_string()));
                }
                return if prefix == "dual(" {
                    Ok(p.dual())
                } else {
                    p.ideal_lattice()
                };
            }
        }
        // longest leading run of atom characters
        let end = rest
            .find(|c: char| "+*() ".contains(c))
            .map(|i| self.pos + i)
            .unwrap_or(self.s.len());
        let word = &self.s[self.pos..end];
        self.pos = end;
        atom_poset(word)
    }
}

fn atom_poset(word: &str) -> Result<Poset> {
    if let Some(rest) = word.strip_prefix("chain:") {
        let n: usize = rest
            .parse()
            .map_err(|_| Error::UnknownSpec(word.to_string()))?;
        return Ok(Poset::chain(n));
    }
    if let Some(rest) = word.strip_prefix("antichain:") {
        let n: usize = rest
            .parse()
            .map_err(|_| Error::UnknownSpec(word.to_string()))?;
        return Ok(Poset::antichain(n));
    }
    if let Some(rest) = word.strip_prefix("P:") {
        let (a, b) = rest
            .split_once(',')
            .ok_or_else(|| Error::UnknownSpec(word.to_string()))?;
        let a: usize = a.parse().map_err(|_| Error::UnknownSpec(word.to_string()))?;
        let b: usize = b.parse().map_err(|_| Error::UnknownSpec(word.to_string()))?;
        return Ok(poset_p_ab(a, b));
    }
    if let Some(fam) = MinusculeFamily::parse(word) {
        return minuscule(&fam);
    }
    if let Some(p) = fixture(word) {
        return Ok(p);
    }
    Err(Error::UnknownSpec(word.to_string()))
}

/// `P_{a,b}` = chain a + (2x2) + chain b (a or b may be zero).
pub fn poset_p_ab(a: usize, b: usize) -> Poset {
    let mid = Poset::product(&Poset::chain(2), &Poset::chain(2));
    let with_a = if a > 0 {
        Poset::ordinal_sum(&Poset::chain(a), &mid)
    } else {
        mid
    };
    let full = if b > 0 {
        Poset::ordinal_sum(&with_a, &Poset::chain(b))
    } else {
        with_a
    };
    full.with_name(format!("P:{a},{b}"))
}
