//! Canonical presentations of the ten catalog groups.
//!
//! Relations and substitutions are kept as words; only their abelianization
//! (an integer coefficient per generator) matters for maps into `Z_N`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::signature::QuotientType;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GeneratorKind {
    Elliptic,
    Connector,
    Reflection,
    Glide,
}

impl GeneratorKind {
    /// +1 for orientation-preserving isometries, -1 for reflections and glides.
    pub fn orientation(self) -> i8 {
        match self {
            GeneratorKind::Reflection | GeneratorKind::Glide => -1,
            _ => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub kind: GeneratorKind,
}

/// A word together with its exponent sum in each generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Word {
    pub text: String,
    pub coeffs: Vec<i64>,
}

impl Word {
    pub fn eval(&self, images: &[u64], order: u64) -> u64 {
        let n = order as i128;
        let s: i128 = self
            .coeffs
            .iter()
            .zip(images)
            .map(|(&c, &v)| c as i128 * v as i128)
            .sum();
        s.rem_euclid(n) as u64
    }
}

/// An element whose image must have exactly the given order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Torsion {
    pub word: Word,
    pub order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Cycle {
    /// Empty period cycle: one reflection commuting with its connector.
    Empty { reflection: usize, connector: usize },
    /// Reflections `c_0, ..., c_s` of a cycle with `s` link periods; `c_s` is conjugate to `c_0`.
    Corners { reflections: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Derived {
    pub target: usize,
    pub word: Word,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub generators: Vec<Generator>,
    pub relations: Vec<Word>,
    pub torsion: Vec<Torsion>,
    pub cycles: Vec<Cycle>,
    /// Generators eliminated by a relation, evaluated in this order.
    pub derived: Vec<Derived>,
}

impl Presentation {
    pub fn index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn is_derived(&self, i: usize) -> bool {
        self.derived.iter().any(|d| d.target == i)
    }

    /// Generators whose images are chosen freely by a search.
    pub fn free_generators(&self) -> Vec<usize> {
        (0..self.generators.len()).filter(|&i| !self.is_derived(i)).collect()
    }

    pub fn reflections(&self) -> impl Iterator<Item = usize> + '_ {
        self.generators
            .iter()
            .enumerate()
            .filter(|(_, g)| g.kind == GeneratorKind::Reflection)
            .map(|(i, _)| i)
    }

    /// Overwrites derived images from the free ones.
    pub fn fill_derived(&self, images: &mut [u64], order: u64) {
        for d in &self.derived {
            images[d.target] = d.word.eval(images, order);
        }
    }

    pub fn word(&self, text: &str) -> Result<Word> {
        let coeffs = Parser::new(self, text).parse()?;
        Ok(Word { text: text.to_string(), coeffs })
    }

    /// `lhs = rhs` becomes `lhs rhs^-1`; a bare word means `word = 1`.
    fn relation(&self, text: &str) -> Result<Word> {
        let coeffs = match text.split_once('=') {
            Some((lhs, rhs)) => {
                let l = Parser::new(self, lhs).parse()?;
                let r = Parser::new(self, rhs).parse()?;
                l.iter().zip(&r).map(|(a, b)| a - b).collect()
            }
            None => Parser::new(self, text).parse()?,
        };
        Ok(Word { text: text.to_string(), coeffs })
    }
}

struct Parser<'a> {
    pres: &'a Presentation,
    text: &'a str,
    tokens: Vec<String>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(pres: &'a Presentation, text: &'a str) -> Self {
        let mut tokens = Vec::new();
        let mut chars = text.chars().peekable();
        while let Some(&c) = chars.peek() {
            if c.is_whitespace() {
                chars.next();
            } else if c.is_ascii_alphabetic() {
                let mut t = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() {
                        t.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(t);
            } else if c == '-' || c.is_ascii_digit() {
                let mut t = String::new();
                t.push(c);
                chars.next();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        t.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(t);
            } else {
                tokens.push(c.to_string());
                chars.next();
            }
        }
        Parser { pres, text, tokens, pos: 0 }
    }

    fn err(&self, reason: &str) -> Error {
        Error::BadMap(format!("cannot read word {:?}: {reason}", self.text))
    }

    fn parse(mut self) -> Result<Vec<i64>> {
        let v = self.word()?;
        if self.pos != self.tokens.len() {
            return Err(self.err("trailing input"));
        }
        Ok(v)
    }

    fn word(&mut self) -> Result<Vec<i64>> {
        let mut acc = vec![0i64; self.pres.generators.len()];
        while let Some(t) = self.tokens.get(self.pos) {
            if t == ")" {
                break;
            }
            let f = self.factor()?;
            for (a, b) in acc.iter_mut().zip(f) {
                *a += b;
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Vec<i64>> {
        let t = self.tokens[self.pos].clone();
        self.pos += 1;
        let mut base = if t == "(" {
            let inner = self.word()?;
            if self.tokens.get(self.pos).map(String::as_str) != Some(")") {
                return Err(self.err("unbalanced parentheses"));
            }
            self.pos += 1;
            inner
        } else {
            let i = self.pres.index(&t).ok_or_else(|| self.err(&format!("unknown generator {t}")))?;
            let mut v = vec![0i64; self.pres.generators.len()];
            v[i] = 1;
            v
        };
        if self.tokens.get(self.pos).map(String::as_str) == Some("^") {
            let e: i64 = self
                .tokens
                .get(self.pos + 1)
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| self.err("bad exponent"))?;
            self.pos += 2;
            for x in &mut base {
                *x *= e;
            }
        }
        Ok(base)
    }
}

struct Builder {
    pres: Presentation,
}

impl Builder {
    fn new(gens: &[(&str, GeneratorKind)]) -> Self {
        let generators = gens
            .iter()
            .map(|&(name, kind)| Generator { name: name.to_string(), kind })
            .collect();
        Builder {
            pres: Presentation {
                generators,
                relations: Vec::new(),
                torsion: Vec::new(),
                cycles: Vec::new(),
                derived: Vec::new(),
            },
        }
    }

    fn idx(&self, name: &str) -> usize {
        self.pres.index(name).expect("generator declared")
    }

    fn rel(mut self, text: &str) -> Self {
        let w = self.pres.relation(text).expect("well-formed relation");
        self.pres.relations.push(w);
        self
    }

    fn elliptic(mut self, name: &str, order: u64) -> Self {
        let text = format!("{name}^{order}");
        self = self.rel(&text);
        let w = self.pres.word(name).unwrap();
        self.pres.torsion.push(Torsion { word: w, order });
        self
    }

    fn derive(mut self, name: &str, word: &str) -> Self {
        let target = self.idx(name);
        let w = self.pres.word(word).expect("well-formed word");
        self.pres.derived.push(Derived { target, word: w });
        self
    }

    fn empty_cycle(mut self, reflection: &str, connector: &str) -> Self {
        let (r, c) = (self.idx(reflection), self.idx(connector));
        self = self.rel(&format!("{reflection}^2"));
        self.pres.cycles.push(Cycle::Empty { reflection: r, connector: c });
        self
    }

    /// Reflections `c_0..c_s`; squares and link relations `(c_{j-1} c_j)^2` are added here.
    fn corner_cycle(mut self, names: &[&str]) -> Self {
        let mut seen = Vec::new();
        for n in names {
            if !seen.contains(n) {
                self = self.rel(&format!("{n}^2"));
                seen.push(n);
            }
        }
        for pair in names.windows(2) {
            let text = format!("({} {})", pair[0], pair[1]);
            self = self.rel(&format!("{text}^2"));
            let w = self.pres.word(&text).unwrap();
            self.pres.torsion.push(Torsion { word: w, order: 2 });
        }
        let reflections = names.iter().map(|n| self.idx(n)).collect();
        self.pres.cycles.push(Cycle::Corners { reflections });
        self
    }

    fn build(self) -> Presentation {
        self.pres
    }
}

pub fn presentation_of(q: &QuotientType) -> Presentation {
    use GeneratorKind::*;
    match *q {
        QuotientType::D6 => {
            let names = ["c0", "c1", "c2", "c3", "c4", "c5"];
            let gens: Vec<_> = names.iter().map(|n| (*n, Reflection)).collect();
            // c6 = c0 because the connector is trivial
            Builder::new(&gens)
                .corner_cycle(&["c0", "c1", "c2", "c3", "c4", "c5", "c0"])
                .build()
        }
        QuotientType::Ann2 => Builder::new(&[
            ("e1", Connector),
            ("e2", Connector),
            ("c10", Reflection),
            ("c20", Reflection),
            ("c21", Reflection),
            ("c22", Reflection),
        ])
        .derive("e2", "e1^-1")
        .derive("c22", "e2 c20 e2^-1")
        .rel("e1 e2")
        .empty_cycle("c10", "e1")
        .corner_cycle(&["c20", "c21", "c22"])
        .rel("e1 c10 = c10 e1")
        .rel("e2 c20 = c22 e2")
        .build(),
        QuotientType::Mb2 => Builder::new(&[
            ("d", Glide),
            ("c0", Reflection),
            ("c1", Reflection),
            ("c2", Reflection),
        ])
        .derive("c2", "d^-2 c0 d^2")
        .corner_cycle(&["c0", "c1", "c2"])
        .rel("c0 d^2 = d^2 c2")
        .build(),
        QuotientType::D12 { m } => Builder::new(&[
            ("x", Elliptic),
            ("c0", Reflection),
            ("c1", Reflection),
            ("c2", Reflection),
        ])
        .derive("c2", "x^-1 c0 x")
        .elliptic("x", m)
        .corner_cycle(&["c0", "c1", "c2"])
        .rel("c0 x = x c2")
        .build(),
        QuotientType::D14 { m } => Builder::new(&[
            ("x", Elliptic),
            ("c0", Reflection),
            ("c1", Reflection),
            ("c2", Reflection),
            ("c3", Reflection),
            ("c4", Reflection),
        ])
        .derive("c4", "x^-1 c0 x")
        .elliptic("x", m)
        .corner_cycle(&["c0", "c1", "c2", "c3", "c4"])
        .rel("c0 x = x c4")
        .build(),
        QuotientType::Mb1 { m } => Builder::new(&[
            ("x", Elliptic),
            ("d", Glide),
            ("c", Reflection),
            ("e", Connector),
        ])
        .derive("e", "x^-1 d^-2")
        .rel("x e d^2")
        .elliptic("x", m)
        .empty_cycle("c", "e")
        .rel("e c = c e")
        .build(),
        QuotientType::D21 { m, n } => Builder::new(&[
            ("x1", Elliptic),
            ("x2", Elliptic),
            ("c", Reflection),
            ("e", Connector),
        ])
        .derive("e", "x2^-1 x1^-1")
        .elliptic("x1", m)
        .elliptic("x2", n)
        .empty_cycle("c", "e")
        .rel("x1 x2 e")
        .rel("e c = c e")
        .build(),
        QuotientType::Ann1 { m } => Builder::new(&[
            ("x", Elliptic),
            ("e1", Connector),
            ("e2", Connector),
            ("c1", Reflection),
            ("c2", Reflection),
        ])
        .derive("e2", "e1^-1 x^-1")
        .rel("x e1 e2")
        .elliptic("x", m)
        .empty_cycle("c1", "e1")
        .empty_cycle("c2", "e2")
        .rel("e1 c1 = c1 e1")
        .rel("e2 c2 = c2 e2")
        .build(),
        QuotientType::D3 { n, m } => Builder::new(&[
            ("x1", Elliptic),
            ("x2", Elliptic),
            ("x3", Elliptic),
            ("e", Connector),
            ("c", Reflection),
        ])
        .derive("e", "(x1 x2 x3)^-1")
        .elliptic("x1", 2)
        .elliptic("x2", n)
        .elliptic("x3", m)
        .rel("x1 x2 x3 e")
        .empty_cycle("c", "e")
        .rel("c e = e c")
        .build(),
        QuotientType::D2c { n, m } => Builder::new(&[
            ("x1", Elliptic),
            ("x2", Elliptic),
            ("e", Connector),
            ("c0", Reflection),
            ("c1", Reflection),
            ("c2", Reflection),
        ])
        .derive("e", "(x1 x2)^-1")
        .derive("c2", "e c0 e^-1")
        .elliptic("x1", n)
        .elliptic("x2", m)
        .corner_cycle(&["c0", "c1", "c2"])
        .rel("x1 x2 e")
        .rel("c2 e = e c0")
        .build(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_abelianize() {
        let p = presentation_of(&QuotientType::Mb1 { m: 5 });
        assert_eq!(p.word("x^-1 d^-1 x").unwrap().coeffs, vec![0, -1, 0, 0]);
        assert_eq!(p.word("(d x)^-1 c (d x)").unwrap().coeffs, vec![0, 0, 1, 0]);
        assert_eq!(p.word("x e d^2").unwrap().coeffs, vec![1, 2, 0, 1]);
        assert!(p.word("x y").is_err());
        assert!(p.word("(x d").is_err());
    }

    #[test]
    fn ann1_shape() {
        let p = presentation_of(&QuotientType::Ann1 { m: 4 });
        let names: Vec<_> = p.generators.iter().map(|g| g.name.as_str()).collect();
        assert_eq!(names, ["x", "e1", "e2", "c1", "c2"]);
        let rels: Vec<_> = p.relations.iter().map(|r| r.text.as_str()).collect();
        assert!(rels.contains(&"x e1 e2"));
        assert!(rels.contains(&"e2 c2 = c2 e2"));
        assert_eq!(p.free_generators().len(), 4);
    }

    #[test]
    fn d6_closes_the_cycle() {
        let p = presentation_of(&QuotientType::D6);
        assert_eq!(p.torsion.len(), 6);
        assert!(p.relations.iter().any(|r| r.text == "(c5 c0)^2"));
    }
}
