//! Block decompositions, least roots, centralisers and conjugacy.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::word::{Letter, PcGroup, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub root: Word,
    pub exponent: u64,
}

/// `conjugator · Π rootᵢ^eᵢ · conjugator⁻¹`, with pairwise commuting blocks
/// whose alphabets are connected in the complement graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub conjugator: Word,
    pub blocks: Vec<Block>,
}

impl BlockDecomposition {
    /// The cyclically reduced core `Π rootᵢ^eᵢ` (unreduced).
    pub fn core(&self) -> Word {
        let powers: Vec<Word> = self
            .blocks
            .iter()
            .map(|b| b.root.pow(b.exponent as i64))
            .collect();
        Word::product(&powers)
    }

    /// The decomposed element, unreduced.
    pub fn reassemble(&self) -> Word {
        self.core().conjugate_by(&self.conjugator)
    }
}

/// Generators of the centraliser: conjugated block roots and conjugated
/// generators disjointly commuting with the core.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralizerBasis {
    pub cyclic_parts: Vec<Word>,
    pub abelian_part: Vec<Word>,
}

impl PcGroup {
    /// Splits a cyclically reduced normal form into its blocks, ordered by
    /// least generator. Each block keeps the relative letter order of `core`.
    pub(crate) fn split_blocks(&self, core: &Word) -> Vec<Word> {
        let alpha: BTreeSet<usize> = core.letters().iter().map(|l| l.generator).collect();
        let alpha: Vec<usize> = alpha.into_iter().collect();
        // components of the complement graph restricted to alpha
        let mut comp: BTreeMap<usize, usize> = BTreeMap::new();
        let mut next = 0;
        for &start in &alpha {
            if comp.contains_key(&start) {
                continue;
            }
            comp.insert(start, next);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &v in &alpha {
                    if v != u && !self.adjacent(u, v) && !comp.contains_key(&v) {
                        comp.insert(v, next);
                        stack.push(v);
                    }
                }
            }
            next += 1;
        }
        (0..next)
            .map(|c| {
                let letters: Vec<Letter> = core
                    .letters()
                    .iter()
                    .copied()
                    .filter(|l| comp[&l.generator] == c)
                    .collect();
                self.nf(&letters)
            })
            .collect()
    }

    /// Least root of a cyclically reduced block in normal form.
    ///
    /// If `block = r^k` then, in the dependence order of the block, the
    /// first `count(x)/k` occurrences of every generator `x` form the first
    /// copy of `r`. Each candidate `k` is therefore checked by extracting
    /// that subsequence and comparing its `k`-th power.
    pub(crate) fn block_root(&self, block: &Word) -> (Word, u64) {
        let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
        for l in block.letters() {
            *counts.entry(l.generator).or_default() += 1;
        }
        let g = counts.values().copied().fold(0, gcd);
        let mut divisors: Vec<u64> = (2..=g).filter(|k| g % k == 0).collect();
        divisors.reverse();
        for k in divisors {
            let mut quota: BTreeMap<usize, u64> = counts.iter().map(|(&x, &c)| (x, c / k)).collect();
            let candidate: Vec<Letter> = block
                .letters()
                .iter()
                .copied()
                .filter(|l| {
                    let q = quota.get_mut(&l.generator).expect("counted");
                    if *q > 0 {
                        *q -= 1;
                        true
                    } else {
                        false
                    }
                })
                .collect();
            let candidate = Word::new(candidate);
            if self.nf(candidate.pow(k as i64).letters()) == *block {
                return (self.nf(candidate.letters()), k);
            }
        }
        (block.clone(), 1)
    }

    pub fn block_decomposition(&self, w: &Word) -> Result<BlockDecomposition> {
        let (conjugator, core) = self.cyclic_reduction(w)?;
        let blocks = self
            .split_blocks(&core)
            .iter()
            .map(|b| {
                let (root, exponent) = self.block_root(b);
                Block { root, exponent }
            })
            .collect();
        Ok(BlockDecomposition { conjugator, blocks })
    }

    /// `(root, k)` with `root^k = w` and `k` maximal.
    pub fn least_root(&self, w: &Word) -> Result<(Word, u64)> {
        if self.is_trivial(w)? {
            return Err(Error::TrivialElement);
        }
        let d = self.block_decomposition(w)?;
        let m = d.blocks.iter().map(|b| b.exponent).fold(0, gcd);
        let parts: Vec<Word> = d
            .blocks
            .iter()
            .map(|b| b.root.pow((b.exponent / m) as i64))
            .collect();
        let core_root = Word::product(&parts);
        let root = self.nf(core_root.conjugate_by(&d.conjugator).letters());
        Ok((root, m))
    }

    pub fn centralizer_basis(&self, w: &Word) -> Result<CentralizerBasis> {
        if self.is_trivial(w)? {
            return Err(Error::TrivialElement);
        }
        let d = self.block_decomposition(w)?;
        let conj = |x: &Word| self.nf(x.conjugate_by(&d.conjugator).letters());
        let mut cyclic_parts: Vec<Word> = Vec::new();
        for b in &d.blocks {
            let c = conj(&b.root);
            if !cyclic_parts.contains(&c) {
                cyclic_parts.push(c);
            }
        }
        let core_alpha: BTreeSet<usize> = d
            .blocks
            .iter()
            .flat_map(|b| b.root.letters().iter().map(|l| l.generator))
            .collect();
        let abelian_part = self
            .commuting_complement(&core_alpha)
            .into_iter()
            .map(|x| conj(&Word::generator(x)))
            .collect();
        Ok(CentralizerBasis { cyclic_parts, abelian_part })
    }

    /// Least element, in normal form, of the set of cyclically reduced
    /// conjugates reachable from `u` by length-preserving single-letter
    /// conjugations. `u` must be a cyclically reduced normal form.
    pub(crate) fn cyclic_class_min(&self, u: &Word) -> Word {
        let len = u.len();
        let mut seen: HashSet<Word> = HashSet::from([u.clone()]);
        let mut queue = VecDeque::from([u.clone()]);
        let mut best = u.clone();
        while let Some(cur) = queue.pop_front() {
            let alpha: BTreeSet<usize> = cur.letters().iter().map(|l| l.generator).collect();
            for &x in &alpha {
                for letter in [Letter::pos(x), Letter::neg(x)] {
                    let x = Word::new(vec![letter]);
                    let next = self.nf(Word::product([&x.inverse(), &cur, &x]).letters());
                    if next.len() == len && seen.insert(next.clone()) {
                        if next.letters() < best.letters() {
                            best = next.clone();
                        }
                        queue.push_back(next);
                    }
                }
            }
        }
        best
    }

    pub fn is_conjugate(&self, a: &Word, b: &Word) -> Result<bool> {
        let (ta, tb) = (self.is_trivial(a)?, self.is_trivial(b)?);
        if ta || tb {
            return Ok(ta == tb);
        }
        let da = self.block_decomposition(a)?;
        let db = self.block_decomposition(b)?;
        if da.blocks.len() != db.blocks.len() {
            return Ok(false);
        }
        let signature = |d: &BlockDecomposition| {
            let mut s: Vec<(u64, Vec<Letter>)> = d
                .blocks
                .iter()
                .map(|bl| (bl.exponent, self.cyclic_class_min(&bl.root).letters().to_vec()))
                .collect();
            s.sort();
            s
        };
        Ok(signature(&da) == signature(&db))
    }

    /// `Some((y, k))` when `b` is conjugate to `y^k` for a generator `y`.
    pub fn is_generator_power_conjugate(&self, b: &Word) -> Result<Option<(usize, i64)>> {
        if self.is_trivial(b)? {
            return Err(Error::TrivialElement);
        }
        let (_, core) = self.cyclic_reduction(b)?;
        let first = core.letters()[0];
        if core.letters().iter().all(|&l| l == first) {
            Ok(Some((first.generator, first.sign() * core.len() as i64)))
        } else {
            Ok(None)
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
