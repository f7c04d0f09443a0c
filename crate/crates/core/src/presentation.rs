//! Symmetrized relator sets, pieces and the C'(1/6) test, Dehn's algorithm,
//! and element orders in sixth groups.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::freegroup::{Letter, Word};

pub const DEFAULT_DEHN_BUDGET: usize = 10_000;

/// A defining relator written as `word^exponent` with `word` primitive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub word: Word,
    pub exponent: u32,
}

/// A set of nonempty cyclically reduced words closed under inversion and
/// rotation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelatorSet {
    relators: Vec<Word>,
    roots: Vec<Root>,
    by_first: HashMap<Letter, Vec<usize>>,
}

impl RelatorSet {
    /// Smallest symmetrized set containing the cyclic cores of `seeds`.
    /// Seeds that are proper powers contribute a [`Root`] with maximal exponent.
    pub fn symmetrize<'a, I: IntoIterator<Item = &'a Word>>(seeds: I) -> RelatorSet {
        let mut set = BTreeSet::new();
        let mut roots: BTreeMap<(Word, u32), Root> = BTreeMap::new();
        for seed in seeds {
            let (core, _) = seed.cyclic_reduce();
            if core.is_empty() {
                continue;
            }
            for base in [core.clone(), core.inverse()] {
                for k in 0..base.len() {
                    set.insert(base.rotate(k));
                }
            }
            let (root, exponent) = core.primitive_root();
            if exponent > 1 {
                let key = orbit_key(&root);
                roots.entry((key.clone(), exponent as u32)).or_insert(Root {
                    word: key,
                    exponent: exponent as u32,
                });
            }
        }
        let relators: Vec<Word> = set.into_iter().collect();
        let mut by_first: HashMap<Letter, Vec<usize>> = HashMap::new();
        for (i, r) in relators.iter().enumerate() {
            by_first
                .entry(r.first().expect("relators are nonempty"))
                .or_default()
                .push(i);
        }
        RelatorSet {
            relators,
            roots: roots.into_values().collect(),
            by_first,
        }
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.relators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relators.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.relators.binary_search(w).is_ok()
    }

    fn starting_with(&self, l: Letter) -> &[usize] {
        self.by_first.get(&l).map_or(&[], Vec::as_slice)
    }

    /// Maximal common prefixes of pairs of distinct relators, excluding the empty word.
    pub fn pieces(&self) -> BTreeSet<Word> {
        let mut out = BTreeSet::new();
        for group in self.by_first.values() {
            for &i in group {
                for &j in group {
                    if i == j {
                        continue;
                    }
                    let len = self.relators[i].common_prefix_len(&self.relators[j]);
                    out.insert(self.relators[i].subword(0, len));
                }
            }
        }
        out
    }

    pub fn max_piece_len(&self) -> usize {
        self.pieces().iter().map(Word::len).max().unwrap_or(0)
    }

    /// C'(1/6): every piece occurring inside a relator `r` is shorter than `|r|/6`.
    pub fn check_c16(&self) -> bool {
        let pieces = self.pieces();
        pieces.iter().all(|u| {
            self.relators
                .iter()
                .filter(|r| r.contains_subword(u))
                .all(|r| 6 * u.len() < r.len())
        })
    }
}

/// Canonical representative of the rotation class of `w` and `w⁻¹`.
fn orbit_key(w: &Word) -> Word {
    let inv = w.inverse();
    (0..w.len())
        .flat_map(|k| [w.rotate(k), inv.rotate(k)])
        .min()
        .unwrap_or_default()
}

impl fmt::Display for RelatorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.relators {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

impl FromStr for RelatorSet {
    type Err = Error;

    fn from_str(text: &str) -> Result<RelatorSet> {
        let words = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Word>>>()?;
        Ok(RelatorSet::symmetrize(&words))
    }
}

/// Order of a group element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => f.write_str("infinite"),
        }
    }
}

/// `⟨v_0, ..., v_{alphabet_size-1} | relators⟩`
#[derive(Clone, Debug)]
pub struct Presentation {
    alphabet_size: usize,
    seeds: Vec<Word>,
    relators: RelatorSet,
    dehn_budget: usize,
}

impl Presentation {
    pub fn new(alphabet_size: usize, seeds: Vec<Word>) -> Result<Presentation> {
        for s in &seeds {
            if let Some(index) = s.max_index() {
                if index as usize >= alphabet_size {
                    return Err(Error::GeneratorOutOfRange {
                        index,
                        alphabet_size,
                    });
                }
            }
        }
        let relators = RelatorSet::symmetrize(&seeds);
        Ok(Presentation {
            alphabet_size,
            seeds,
            relators,
            dehn_budget: DEFAULT_DEHN_BUDGET,
        })
    }

    pub fn with_dehn_budget(mut self, budget: usize) -> Self {
        self.dehn_budget = budget;
        self
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    /// The defining words the relator set was symmetrized from.
    pub fn seeds(&self) -> &[Word] {
        &self.seeds
    }

    pub fn relators(&self) -> &RelatorSet {
        &self.relators
    }

    pub fn dehn_budget(&self) -> usize {
        self.dehn_budget
    }

    /// Leftmost position holding more than half of some relator; among the
    /// relators matching there, the longest match wins (first in shortlex on ties).
    fn find_dehn_step(&self, letters: &[Letter]) -> Option<(usize, usize, usize)> {
        for pos in 0..letters.len() {
            let rest = &letters[pos..];
            let mut best: Option<(usize, usize)> = None;
            for &ri in self.relators.starting_with(letters[pos]) {
                let r = self.relators.relators[ri].letters();
                let len = rest.iter().zip(r).take_while(|(a, b)| a == b).count();
                if 2 * len > r.len() && best.is_none_or(|(best_len, _)| len > best_len) {
                    best = Some((len, ri));
                }
            }
            if let Some((len, ri)) = best {
                return Some((pos, len, ri));
            }
        }
        None
    }

    /// Dehn's algorithm: replace any subword longer than half a relator by the
    /// inverse of the relator's remainder until none is left.
    pub fn dehn_reduce(&self, w: &Word) -> Result<Word> {
        let mut current = w.clone();
        let mut steps = 0;
        while let Some((pos, len, ri)) = self.find_dehn_step(current.letters()) {
            steps += 1;
            if steps > self.dehn_budget {
                return Err(Error::DehnBudgetExceeded {
                    budget: self.dehn_budget,
                });
            }
            let r = self.relators.relators[ri].letters();
            let letters = current.letters();
            let replacement = r[len..].iter().rev().map(|l| l.inverse());
            current = Word::reduce(
                letters[..pos]
                    .iter()
                    .copied()
                    .chain(replacement)
                    .chain(letters[pos + len..].iter().copied()),
            );
        }
        Ok(current)
    }

    pub fn is_identity(&self, w: &Word) -> Result<bool> {
        if w.is_empty() {
            return Ok(true);
        }
        Ok(self.dehn_reduce(w)?.is_empty())
    }

    pub fn equal(&self, a: &Word, b: &Word) -> Result<bool> {
        self.is_identity(&a.concat(&b.inverse()))
    }

    /// Dehn reduction applied to the word read cyclically: rotations are
    /// reduced until no rotation gets shorter.
    pub fn cyclic_dehn_reduce(&self, w: &Word) -> Result<Word> {
        let mut core = self.dehn_reduce(w)?.cyclic_reduce().0;
        'outer: loop {
            for k in 0..core.len() {
                let reduced = self.dehn_reduce(&core.rotate(k))?;
                if reduced.len() < core.len() {
                    core = reduced.cyclic_reduce().0;
                    continue 'outer;
                }
            }
            return Ok(core);
        }
    }

    /// Order of `w` via the torsion theorem for sixth groups: an element of
    /// finite order is, after cyclic reduction, a rotation of a power of some root.
    pub fn order(&self, w: &Word) -> Result<Order> {
        if self.is_identity(w)? {
            return Ok(Order::Finite(1));
        }
        let core = self.cyclic_dehn_reduce(w)?;
        if core.is_empty() {
            return Ok(Order::Finite(1));
        }
        for root in self.relators.roots() {
            let m = root.word.len();
            if core.len() % m != 0 {
                continue;
            }
            let k = (core.len() / m) as i64;
            if core.is_rotation_of(&root.word.pow(k)) || core.is_rotation_of(&root.word.pow(-k)) {
                let n = root.exponent as u64;
                return Ok(Order::Finite(n / gcd(k as u64 % n, n)));
            }
        }
        Ok(Order::Infinite)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
