//! Words over the generators of a partially commutative group and their
//! canonical geodesic normal forms.
//!
//! A [`Word`] is a bare letter sequence; the group it lives in is the
//! [`PcGroup`] receiving it. Letters whose generator index falls outside the
//! ambient graph are rejected with [`Error::ForeignLetter`].

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::SimplicialGraph;

/// A generator or its formal inverse. Letters order by generator first and
/// then positive before negative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(generator: usize) -> Self {
        Letter { generator, inverse: false }
    }

    pub fn neg(generator: usize) -> Self {
        Letter { generator, inverse: true }
    }

    pub fn inv(self) -> Self {
        Letter { generator: self.generator, inverse: !self.inverse }
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn generator(v: usize) -> Self {
        Word(vec![Letter::pos(v)])
    }

    /// `v^k` as a word of length `|k|`.
    pub fn generator_power(v: usize, k: i64) -> Self {
        let l = if k < 0 { Letter::neg(v) } else { Letter::pos(v) };
        Word(vec![l; k.unsigned_abs() as usize])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Concatenation of any number of words.
    pub fn product<'a, I: IntoIterator<Item = &'a Word>>(parts: I) -> Word {
        Word(parts.into_iter().flat_map(|w| w.0.iter().copied()).collect())
    }

    /// `self^k` without reduction; negative `k` uses the inverse.
    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        Word(base.0.repeat(k.unsigned_abs() as usize))
    }

    /// `v · self · v⁻¹`, unreduced.
    pub fn conjugate_by(&self, v: &Word) -> Word {
        Word::product([v, self, &v.inverse()])
    }

    /// Shortlex order: shorter first, then lexicographic by letter.
    pub fn shortlex_cmp(&self, other: &Word) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }

    /// Formats the word with vertex names of `graph`.
    pub fn display<'a>(&'a self, graph: &'a SimplicialGraph) -> DisplayWord<'a> {
        DisplayWord { word: self, graph }
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

pub struct DisplayWord<'a> {
    word: &'a Word,
    graph: &'a SimplicialGraph,
}

impl fmt::Display for DisplayWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.word.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.graph.name(l.generator))?;
            if l.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

/// The partially commutative group defined by a simplicial graph.
#[derive(Clone, Debug)]
pub struct PcGroup {
    graph: SimplicialGraph,
    rank: usize,
    adjacent: Vec<bool>,
}

impl PartialEq for PcGroup {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph
    }
}

impl PcGroup {
    pub fn new(graph: SimplicialGraph) -> Self {
        let rank = graph.len();
        let mut adjacent = vec![false; rank * rank];
        for (u, v) in graph.edges() {
            adjacent[u * rank + v] = true;
            adjacent[v * rank + u] = true;
        }
        PcGroup { graph, rank, adjacent }
    }

    pub fn graph(&self) -> &SimplicialGraph {
        &self.graph
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Whether distinct generators `u` and `v` commute.
    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacent[u * self.rank + v]
    }

    /// Occurrences that may not be swapped: same generator or non-commuting.
    #[inline]
    fn dependent(&self, a: Letter, b: Letter) -> bool {
        a.generator == b.generator || !self.adjacent(a.generator, b.generator)
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.0.iter().find(|l| l.generator >= self.rank) {
            Some(l) => Err(Error::ForeignLetter(l.generator)),
            None => Ok(()),
        }
    }

    /// Parses whitespace-separated tokens `name` or `name^-1`.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        text.split_whitespace()
            .map(|tok| {
                if let Some(name) = tok.strip_suffix("^-1") {
                    if let Ok(v) = self.graph.vertex(name) {
                        return Ok(Letter::neg(v));
                    }
                }
                self.graph
                    .vertex(tok)
                    .map(Letter::pos)
                    .map_err(|_| Error::MalformedToken(tok.to_string()))
            })
            .collect()
    }

    pub fn format_word(&self, w: &Word) -> String {
        w.display(&self.graph).to_string()
    }

    /// Canonical geodesic: the shortlex-least word representing `w`.
    pub fn normal_form(&self, w: &Word) -> Result<Word> {
        self.check_word(w)?;
        Ok(self.nf(w.letters()))
    }

    pub(crate) fn nf(&self, letters: &[Letter]) -> Word {
        let reduced = self.reduce(letters);
        self.lex_least(reduced)
    }

    /// Cancels each incoming letter against the nearest occurrence of its
    /// inverse that it can reach through commuting letters. The output is a
    /// geodesic for the same element.
    fn reduce(&self, letters: &[Letter]) -> Vec<Letter> {
        let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
        for &x in letters {
            let mut cancel = None;
            for j in (0..out.len()).rev() {
                let y = out[j];
                if y.generator == x.generator {
                    if y.inverse != x.inverse {
                        cancel = Some(j);
                    }
                    break;
                }
                if !self.adjacent(y.generator, x.generator) {
                    break;
                }
            }
            match cancel {
                Some(j) => {
                    out.remove(j);
                }
                None => out.push(x),
            }
        }
        out
    }

    /// Lexicographically least linearisation of the dependence order of a
    /// geodesic.
    fn lex_least(&self, reduced: Vec<Letter>) -> Word {
        let n = reduced.len();
        if n <= 1 {
            return Word(reduced);
        }
        let mut pending = vec![0u32; n];
        for i in 0..n {
            for j in 0..i {
                if self.dependent(reduced[j], reduced[i]) {
                    pending[i] += 1;
                }
            }
        }
        let mut done = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for _ in 0..n {
            let next = (0..n)
                .filter(|&i| !done[i] && pending[i] == 0)
                .min_by_key(|&i| reduced[i])
                .expect("dependence order is acyclic");
            done[next] = true;
            out.push(reduced[next]);
            for k in next + 1..n {
                if !done[k] && self.dependent(reduced[next], reduced[k]) {
                    pending[k] -= 1;
                }
            }
        }
        Word(out)
    }

    pub fn is_trivial(&self, w: &Word) -> Result<bool> {
        self.check_word(w)?;
        Ok(self.reduce(w.letters()).is_empty())
    }

    pub fn equal(&self, a: &Word, b: &Word) -> Result<bool> {
        self.check_word(a)?;
        self.check_word(b)?;
        Ok(self.reduce(a.concat(&b.inverse()).letters()).is_empty())
    }

    /// Generators occurring in a geodesic for `w`.
    pub fn alphabet_of(&self, w: &Word) -> Result<BTreeSet<usize>> {
        self.check_word(w)?;
        Ok(self.reduce(w.letters()).iter().map(|l| l.generator).collect())
    }

    /// Generators outside `alphabet_of(w)` commuting with all of it.
    pub fn disjoint_commuting_part(&self, w: &Word) -> Result<BTreeSet<usize>> {
        let alpha = self.alphabet_of(w)?;
        Ok(self.commuting_complement(&alpha))
    }

    pub(crate) fn commuting_complement(&self, alpha: &BTreeSet<usize>) -> BTreeSet<usize> {
        (0..self.rank)
            .filter(|x| !alpha.contains(x) && alpha.iter().all(|&a| self.adjacent(*x, a)))
            .collect()
    }

    pub fn commutes(&self, a: &Word, b: &Word) -> Result<bool> {
        self.check_word(a)?;
        self.check_word(b)?;
        Ok(self.commutes_unchecked(a, b))
    }

    pub(crate) fn commutes_unchecked(&self, a: &Word, b: &Word) -> bool {
        let c = Word::product([&a.inverse(), &b.inverse(), a, b]);
        self.reduce(c.letters()).is_empty()
    }

    /// Some geodesic for `w` starts with `l`.
    pub fn letter_left_divides(&self, l: Letter, w: &Word) -> Result<bool> {
        let nf = self.normal_form(w)?;
        Ok(self.leading(nf.letters()).contains(&l))
    }

    /// Some geodesic for `w` ends with `l`.
    pub fn letter_right_divides(&self, l: Letter, w: &Word) -> Result<bool> {
        let nf = self.normal_form(w)?;
        let rev: Vec<Letter> = nf.letters().iter().rev().copied().collect();
        Ok(self.leading(&rev).contains(&l))
    }

    /// Letters of a geodesic that can be moved to its front.
    fn leading(&self, geodesic: &[Letter]) -> Vec<Letter> {
        geodesic
            .iter()
            .enumerate()
            .filter(|&(i, &l)| geodesic[..i].iter().all(|&e| !self.dependent(e, l)))
            .map(|(_, &l)| l)
            .collect()
    }

    /// Splits `w` as `conjugator · core · conjugator⁻¹` with `core`
    /// cyclically reduced and the conjugator as short as possible. Both parts
    /// are returned in normal form.
    pub fn cyclic_reduction(&self, w: &Word) -> Result<(Word, Word)> {
        let mut core = self.normal_form(w)?;
        let mut conj: Vec<Letter> = Vec::new();
        loop {
            let front = self.leading(core.letters());
            let rev: Vec<Letter> = core.letters().iter().rev().copied().collect();
            let back = self.leading(&rev);
            let strip = front.iter().copied().filter(|x| back.contains(&x.inv())).min();
            match strip {
                Some(x) => {
                    conj.push(x);
                    let next = Word::product([&Word(vec![x.inv()]), &core, &Word(vec![x])]);
                    core = self.nf(next.letters());
                }
                None => break,
            }
        }
        Ok((self.nf(&conj), core))
    }

    pub fn is_cyclically_reduced(&self, w: &Word) -> Result<bool> {
        let nf = self.normal_form(w)?;
        Ok(self.reduce(nf.concat(&nf).letters()).len() == 2 * nf.len())
    }

    /// Membership in the parabolic subgroup generated by `s`.
    pub fn parabolic_membership(&self, w: &Word, s: &BTreeSet<usize>) -> Result<bool> {
        if let Some(&bad) = s.iter().find(|&&v| v >= self.rank) {
            return Err(Error::VertexOutOfRange(bad));
        }
        Ok(self.alphabet_of(w)?.is_subset(s))
    }
}
