//! The element coding `φ_T: G_T → ℕ`, the operation `⋆_T` it induces on
//! codes, and the decision procedure for extending a finite injective partial
//! map on codes to an automorphism of `(ℕ, ⋆_T)`.
//!
//! Codes are forced for the identity (0), generators (`3i+1`) and their
//! inverses (`3i+2`). Every other element gets the next unused multiple of 3
//! in the order its shortlex-least representative is reached. Representatives
//! are therefore geodesic, and every subword of a representative is itself a
//! representative that was registered earlier.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::freegroup::{Letter, Word};
use crate::graph::Graph;
use crate::graphrel;
use crate::presentation::Presentation;
use crate::williams::{relators_from_graph, CanonicalAuto};

pub const DEFAULT_MAX_CODE: u64 = 500;
/// Upper limit on registered elements before enumeration gives up.
pub const DEFAULT_CODING_BUDGET: usize = 20_000;

#[derive(Clone, Copy, Debug)]
struct Cursor {
    len: usize,
    parent: usize,
    rank: usize,
}

/// A growing prefix of `φ_T`, extended on demand.
#[derive(Clone, Debug)]
pub struct CodingTable {
    graph: Graph,
    pres: Presentation,
    reps: Vec<(u64, Word)>,
    by_code: HashMap<u64, usize>,
    by_word: HashMap<Word, u64>,
    // registered representatives of each length, as indices into `reps`
    layers: Vec<Vec<usize>>,
    cursor: Cursor,
    next_composite: u64,
    exhausted: bool,
    budget: usize,
    star_cache: HashMap<(u64, u64), u64>,
}

impl CodingTable {
    pub fn new(graph: &Graph) -> CodingTable {
        CodingTable::with_presentation(graph, relators_from_graph(graph))
    }

    /// For a custom Dehn budget; `pres` must be `relators_from_graph(graph)`.
    pub fn with_presentation(graph: &Graph, pres: Presentation) -> CodingTable {
        let identity = Word::identity();
        CodingTable {
            graph: graph.clone(),
            pres,
            reps: vec![(0, identity.clone())],
            by_code: HashMap::from([(0, 0)]),
            by_word: HashMap::from([(identity, 0)]),
            layers: vec![vec![0], vec![]],
            cursor: Cursor {
                len: 1,
                parent: 0,
                rank: 0,
            },
            next_composite: 3,
            exhausted: false,
            budget: DEFAULT_CODING_BUDGET,
            star_cache: HashMap::new(),
        }
    }

    pub fn with_budget(mut self, budget: usize) -> CodingTable {
        self.budget = budget;
        self
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    /// `(code, representative)` in registration order.
    pub fn reps(&self) -> &[(u64, Word)] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Every element of the group is registered (only for finite groups).
    pub fn is_exhausted(&self) -> bool {
        self.exhausted
    }

    /// Whether `code` can name an element at all: 0, multiples of 3, and
    /// `3i+1`, `3i+2` for vertices `i` of the graph.
    pub fn is_admissible(&self, code: u64) -> bool {
        code.is_multiple_of(3) || code / 3 < self.graph.n() as u64
    }

    pub fn is_registered(&self, code: u64) -> bool {
        self.by_code.contains_key(&code)
    }

    /// Representative of an already registered code.
    pub fn registered_word(&self, code: u64) -> Option<&Word> {
        self.by_code.get(&code).map(|&i| &self.reps[i].1)
    }

    /// Registered codes, ascending.
    pub fn codes(&self) -> Vec<u64> {
        let mut codes: Vec<u64> = self.by_code.keys().copied().collect();
        codes.sort_unstable();
        codes
    }

    /// Length of the longest fully enumerated representative class.
    pub fn complete_length(&self) -> usize {
        if self.exhausted {
            usize::MAX
        } else {
            self.cursor.len - 1
        }
    }

    fn covers(&self, max_code: u64) -> bool {
        if self.exhausted {
            return true;
        }
        let gens_done = (0..self.graph.n() as u64)
            .all(|i| 3 * i + 1 > max_code || self.is_registered(3 * i + 2));
        gens_done && self.next_composite > max_code
    }

    /// Register elements until every admissible code `≤ max_code` is taken
    /// (or the group runs out of elements).
    pub fn extend_to(&mut self, max_code: u64) -> Result<()> {
        while !self.covers(max_code) {
            self.step()?;
        }
        Ok(())
    }

    /// Register every element whose geodesic length is at most `len`.
    pub fn complete_through(&mut self, len: usize) -> Result<()> {
        while !self.exhausted && self.cursor.len <= len {
            self.step()?;
        }
        Ok(())
    }

    /// Examine one candidate; false once the group is exhausted.
    fn step(&mut self) -> Result<bool> {
        if self.exhausted {
            return Ok(false);
        }
        let Cursor { len, parent, rank } = self.cursor;
        let parents = &self.layers[len - 1];
        if parent >= parents.len() {
            if self.layers[len].is_empty() {
                self.exhausted = true;
                return Ok(false);
            }
            self.layers.push(Vec::new());
            self.cursor = Cursor {
                len: len + 1,
                parent: 0,
                rank: 0,
            };
            return Ok(true);
        }
        if rank >= 2 * self.graph.n() {
            self.cursor = Cursor {
                len,
                parent: parent + 1,
                rank: 0,
            };
            return Ok(true);
        }
        self.cursor.rank += 1;

        let prefix = &self.reps[parents[parent]].1;
        let letter = Letter::from_rank(rank);
        if prefix.last().is_some_and(|l| l.cancels(letter)) {
            return Ok(true);
        }
        let mut letters = prefix.letters().to_vec();
        letters.push(letter);
        let candidate = Word::from_reduced(letters);
        // a shortlex-least geodesic has shortlex-least geodesic suffixes too
        if len >= 2 && !self.by_word.contains_key(&candidate.subword(1, len)) {
            return Ok(true);
        }
        if self.pres.dehn_reduce(&candidate)?.len() < len {
            return Ok(true);
        }
        for (_, u) in &self.reps {
            if self.pres.equal(u, &candidate)? {
                return Ok(true);
            }
        }
        if self.reps.len() >= self.budget {
            return Err(Error::CodingBudgetExceeded {
                budget: self.budget,
            });
        }
        let code = if len == 1 {
            3 * letter.index() as u64 + 1 + letter.is_inverse() as u64
        } else {
            let c = self.next_composite;
            self.next_composite += 3;
            c
        };
        self.by_code.insert(code, self.reps.len());
        self.by_word.insert(candidate.clone(), code);
        self.layers[len].push(self.reps.len());
        self.reps.push((code, candidate));
        Ok(true)
    }

    /// Code of `w` if its element is already registered; never extends.
    pub fn lookup(&self, w: &Word) -> Result<Option<u64>> {
        if let Some(&c) = self.by_word.get(w) {
            return Ok(Some(c));
        }
        let d = self.pres.dehn_reduce(w)?;
        if let Some(&c) = self.by_word.get(&d) {
            return Ok(Some(c));
        }
        for (c, u) in &self.reps {
            if u.len() <= d.len() && self.pres.equal(u, &d)? {
                return Ok(Some(*c));
            }
        }
        Ok(None)
    }

    /// `φ_T(w)`, registering elements as needed.
    pub fn code_of(&mut self, w: &Word) -> Result<u64> {
        let d = self.pres.dehn_reduce(w)?;
        // the geodesic length is at most the Dehn-reduced length
        self.complete_through(d.len())?;
        Ok(self
            .lookup(&d)?
            .expect("every element of length <= n is registered once length n is complete"))
    }

    /// `φ_T⁻¹(code)`, registering elements as needed.
    pub fn word_of(&mut self, code: u64) -> Result<Word> {
        if !self.is_admissible(code) {
            return Err(Error::NoSuchCode(code));
        }
        while !self.is_registered(code) {
            if !self.step()? {
                return Err(Error::NoSuchCode(code));
            }
        }
        Ok(self.registered_word(code).expect("registered").clone())
    }

    /// `n ⋆_T m`.
    pub fn star(&mut self, n: u64, m: u64) -> Result<u64> {
        if let Some(&c) = self.star_cache.get(&(n, m)) {
            return Ok(c);
        }
        let w = self.word_of(n)?.concat(&self.word_of(m)?);
        let c = self.code_of(&w)?;
        self.star_cache.insert((n, m), c);
        Ok(c)
    }

    /// `n ⋆_T m` if both factors and the product are registered.
    pub fn star_registered(&self, n: u64, m: u64) -> Result<Option<u64>> {
        if let Some(&c) = self.star_cache.get(&(n, m)) {
            return Ok(Some(c));
        }
        match (self.registered_word(n), self.registered_word(m)) {
            (Some(a), Some(b)) => self.lookup(&a.concat(b)),
            _ => Ok(None),
        }
    }

    pub fn inverse_code(&mut self, n: u64) -> Result<u64> {
        let w = self.word_of(n)?.inverse();
        self.code_of(&w)
    }

    /// Lines `<code> <representative>`, ascending by code.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for c in self.codes() {
            out.push_str(&format!(
                "{c} {}\n",
                self.registered_word(c).expect("registered")
            ));
        }
        out
    }

    /// CSV `n,m,star` over all registered pairs with both codes `≤ max_code`.
    pub fn star_table_csv(&mut self, max_code: u64) -> Result<String> {
        self.extend_to(max_code)?;
        let codes: Vec<u64> = self
            .codes()
            .into_iter()
            .filter(|&c| c <= max_code)
            .collect();
        let mut out = String::from("n,m,star\n");
        for &n in &codes {
            for &m in &codes {
                out.push_str(&format!("{n},{m},{}\n", self.star(n, m)?));
            }
        }
        Ok(out)
    }
}

/// Enumerate `φ_T` until every admissible code `≤ max_code` is assigned.
pub fn enumerate(graph: &Graph, max_code: u64) -> Result<CodingTable> {
    let mut table = CodingTable::new(graph);
    table.extend_to(max_code)?;
    Ok(table)
}

/// A finite injective partial function on codes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartialMap {
    pairs: BTreeMap<u64, u64>,
}

impl PartialMap {
    pub fn new<I: IntoIterator<Item = (u64, u64)>>(pairs: I) -> Result<PartialMap> {
        let mut map = BTreeMap::new();
        for (a, v) in pairs {
            if let Some(old) = map.insert(a, v) {
                if old != v {
                    return Err(Error::InvalidMap(format!(
                        "{a} is sent to both {old} and {v}"
                    )));
                }
            }
        }
        let mut values: Vec<u64> = map.values().copied().collect();
        values.sort_unstable();
        if let Some(p) = values.windows(2).find(|p| p[0] == p[1]) {
            return Err(Error::InvalidMap(format!("value {} is hit twice", p[0])));
        }
        Ok(PartialMap { pairs: map })
    }

    pub fn get(&self, a: u64) -> Option<u64> {
        self.pairs.get(&a).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.pairs.iter().map(|(&a, &v)| (a, v))
    }

    pub fn domain(&self) -> impl Iterator<Item = u64> + '_ {
        self.pairs.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Domain is an initial segment `{0, ..., k-1}`.
    pub fn is_sequence(&self) -> bool {
        self.pairs.keys().enumerate().all(|(i, &a)| a == i as u64)
    }
}

impl fmt::Display for PartialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, v) in self.iter() {
            writeln!(f, "{a} {v}")?;
        }
        Ok(())
    }
}

impl FromStr for PartialMap {
    type Err = Error;

    /// Lines `<arg> <value>`; `#` starts a comment line.
    fn from_str(text: &str) -> Result<PartialMap> {
        let mut pairs = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let bad = |message: String| Error::MapFormat { line, message };
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            let [a, v] = fields.as_slice() else {
                return Err(bad("expected `<arg> <value>`".into()));
            };
            let a: u64 = a.parse().map_err(|_| bad(format!("bad number `{a}`")))?;
            let v: u64 = v.parse().map_err(|_| bad(format!("bad number `{v}`")))?;
            pairs.push((a, v));
        }
        PartialMap::new(pairs).map_err(|e| Error::MapFormat {
            line: 0,
            message: e.to_string(),
        })
    }
}

/// Witness for `Σ(T) ∩ N_s ≠ ∅`: `s(3i+1) = k ⋆ (3ρ(i)+1+l) ⋆ k'` with
/// `k = φ_T(t)`, `k' = φ_T(t⁻¹)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub rho: Vec<usize>,
    /// `ρ` restricted to `{i : 3i+1 ∈ dom(s)}`.
    pub r: BTreeMap<usize, usize>,
    pub k: u64,
    pub k_inv: u64,
    pub l: u8,
    pub t: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub holds: bool,
    /// `s(n ⋆ m) = s(n) ⋆ s(m)` whenever `n, m, n ⋆ m ∈ dom(s)`.
    pub condition1: bool,
    pub witness: Option<Witness>,
    pub bound: usize,
    /// The answer depends on the conjugator bound: a negative answer came
    /// from exhausting the bounded search, or the witness has `|t| = bound`.
    pub at_bound: bool,
    /// Every code the subword structure of `dom(s)` relies on is in `dom(s)`.
    pub subword_closed: bool,
}

fn registered_words(table: &mut CodingTable, s: &PartialMap) -> Result<HashMap<u64, Word>> {
    let mut words = HashMap::new();
    for (a, v) in s.iter() {
        for c in [a, v] {
            if let std::collections::hash_map::Entry::Vacant(e) = words.entry(c) {
                e.insert(table.word_of(c)?);
            }
        }
    }
    Ok(words)
}

/// `(max |φ_T⁻¹(s(3i+1))| - 1) / 2`, the conjugator length that suffices
/// when conjugation does not cancel.
pub fn default_bound(table: &mut CodingTable, s: &PartialMap) -> Result<usize> {
    let mut bound = 0;
    for (a, v) in s.iter() {
        if a % 3 == 1 {
            bound = bound.max(table.word_of(v)?.len().saturating_sub(1) / 2);
        }
    }
    Ok(bound)
}

/// Whether `dom(s)` contains, for each of its codes, everything the
/// homomorphism condition needs to pin the value down: `3i+1` and `0` for
/// `3i+2`, and the codes of all proper subwords for composite codes.
pub fn subword_closed(table: &mut CodingTable, s: &PartialMap) -> Result<bool> {
    for a in s.domain() {
        for need in requirements(table, a)? {
            if s.get(need).is_none() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn requirements(table: &mut CodingTable, a: u64) -> Result<Vec<u64>> {
    if a == 0 || a % 3 == 1 {
        return Ok(Vec::new());
    }
    if a % 3 == 2 {
        return Ok(vec![a - 1, 0]);
    }
    let w = table.word_of(a)?;
    let mut out = Vec::new();
    for start in 0..w.len() {
        for end in start + 1..=w.len() {
            if end - start < w.len() {
                out.push(table.code_of(&w.subword(start, end))?);
            }
        }
    }
    Ok(out)
}

/// Whether `s` extends to an automorphism of `(ℕ, ⋆_T)`, by the two
/// conditions that characterise this when `dom(s)` is an initial segment (more
/// generally, subword-closed; see [`subword_closed`]). On other domains the
/// conditions can hold for maps nothing extends, e.g. `{2 ↦ 0}`.
/// Condition (1) on `dom(s)` comes first, then a search over conjugators `t` (shortlex, `|t| ≤ bound`),
/// `ρ ∈ Aut(T)` (lexicographic) and `l ∈ {0, 1}` for the generator condition.
/// The first witness found has the shortest conjugator available.
pub fn sigma_ns_nonempty(
    table: &mut CodingTable,
    s: &PartialMap,
    bound: Option<usize>,
) -> Result<Decision> {
    let words = registered_words(table, s)?;
    let bound = match bound {
        Some(b) => b,
        None => default_bound(table, s)?,
    };
    let closed = subword_closed(table, s)?;
    let pres = table.presentation().clone();

    let mut condition1 = true;
    'pairs: for (n, sn) in s.iter() {
        for (m, sm) in s.iter() {
            let product = words[&n].concat(&words[&m]);
            for (d, sd) in s.iter() {
                if pres.equal(&product, &words[&d])? {
                    if !pres.equal(&words[&sn].concat(&words[&sm]), &words[&sd])? {
                        condition1 = false;
                        break 'pairs;
                    }
                    break;
                }
            }
        }
    }

    let n = table.graph().n();
    let gens: Vec<(usize, u64)> = s
        .iter()
        .filter(|(a, _)| a % 3 == 1)
        .map(|(a, v)| ((a / 3) as usize, v))
        .collect();
    let mut witness = None;
    if gens.is_empty() {
        witness = Some(Witness {
            rho: (0..n).collect(),
            r: BTreeMap::new(),
            k: 0,
            k_inv: 0,
            l: 0,
            t: Word::identity(),
        });
    } else if condition1 {
        let auts = graphrel::automorphisms(table.graph());
        'search: for t in Word::all_up_to(n, bound) {
            for rho in &auts {
                for l in 0..2u8 {
                    let eps = 1 - 2 * l as i8;
                    let mut ok = true;
                    for &(i, v) in &gens {
                        let image = Word::letter(Letter::new(rho[i] as u32, eps)).conjugate_by(&t);
                        if !pres.equal(&image, &words[&v])? {
                            ok = false;
                            break;
                        }
                    }
                    if ok {
                        let r = gens.iter().map(|&(i, _)| (i, rho[i])).collect();
                        let k = table.code_of(&t)?;
                        let k_inv = table.code_of(&t.inverse())?;
                        witness = Some(Witness {
                            rho: rho.clone(),
                            r,
                            k,
                            k_inv,
                            l,
                            t: t.clone(),
                        });
                        break 'search;
                    }
                }
            }
        }
    }
    let holds = condition1 && witness.is_some();
    let at_bound = match &witness {
        Some(w) => !gens.is_empty() && w.t.len() == bound,
        None => condition1,
    };
    Ok(Decision {
        holds,
        condition1,
        witness,
        bound,
        at_bound,
        subword_closed: closed,
    })
}

/// Brute force: some `θ(v_i) = t v_{ρ(i)}^ε t⁻¹` with `|t| ≤ bound` sends
/// the representative of every `a ∈ dom(s)` to the representative of `s(a)`.
pub fn oracle_aut_extends(
    table: &mut CodingTable,
    s: &PartialMap,
    bound: usize,
) -> Result<Option<CanonicalAuto>> {
    let words = registered_words(table, s)?;
    let pres = table.presentation().clone();
    let n = table.graph().n();
    let auts = graphrel::automorphisms(table.graph());
    for t in Word::all_up_to(n, bound) {
        for rho in &auts {
            for epsilon in [1i8, -1] {
                let theta = CanonicalAuto {
                    rho: rho.clone(),
                    epsilon,
                    t: t.clone(),
                };
                let gm = theta.generator_map();
                let mut ok = true;
                for (a, v) in s.iter() {
                    if !pres.equal(&gm.apply(&words[&a]), &words[&v])? {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    return Ok(Some(theta));
                }
            }
        }
    }
    Ok(None)
}

/// Registered codes `≤ max_code` with a dense index, shared by the prepared
/// checker and oracle.
#[derive(Clone, Debug)]
struct SmallCodes {
    codes: Vec<u64>,
    index: Vec<Option<usize>>,
}

impl SmallCodes {
    fn new(table: &mut CodingTable, max_code: u64) -> Result<SmallCodes> {
        table.extend_to(max_code)?;
        let codes: Vec<u64> = table
            .codes()
            .into_iter()
            .filter(|&c| c <= max_code)
            .collect();
        let mut index = vec![None; max_code as usize + 1];
        for (k, &c) in codes.iter().enumerate() {
            index[c as usize] = Some(k);
        }
        Ok(SmallCodes { codes, index })
    }

    fn small(&self, code: Option<u64>) -> Option<usize> {
        code.and_then(|c| self.index.get(c as usize).copied().flatten())
    }

    fn idx(&self, code: u64) -> usize {
        self.small(Some(code))
            .unwrap_or_else(|| panic!("code {code} is not a registered code in range"))
    }
}

/// The same decision as [`sigma_ns_nonempty`] with all products among codes
/// `≤ max_code` and all candidate generator images precomputed, for sweeps
/// over many partial maps with codes `≤ max_code`.
#[derive(Clone, Debug)]
pub struct PreparedChecker {
    small: SmallCodes,
    star: Vec<Vec<Option<usize>>>,
    // per candidate (t, ρ, l): image index of each generator, plus k
    candidates: Vec<(Vec<Option<usize>>, u64)>,
    requirements: Vec<Vec<usize>>,
}

impl PreparedChecker {
    pub fn new(table: &mut CodingTable, max_code: u64, bound: usize) -> Result<PreparedChecker> {
        let small = SmallCodes::new(table, max_code)?;
        let mut star = Vec::with_capacity(small.codes.len());
        for &a in &small.codes {
            let mut row = Vec::with_capacity(small.codes.len());
            for &b in &small.codes {
                row.push(small.small(table.star_registered(a, b)?));
            }
            star.push(row);
        }
        let n = table.graph().n();
        let auts = graphrel::automorphisms(table.graph());
        let mut candidates: Vec<(Vec<Option<usize>>, u64)> = Vec::new();
        for t in Word::all_up_to(n, bound) {
            let k = table.code_of(&t)?;
            for rho in &auts {
                for l in 0..2i8 {
                    let mut images = Vec::with_capacity(n);
                    for &r in rho {
                        let image = Word::letter(Letter::new(r as u32, 1 - 2 * l)).conjugate_by(&t);
                        images.push(small.small(table.lookup(&image)?));
                    }
                    if !candidates.iter().any(|(seen, _)| *seen == images) {
                        candidates.push((images, k));
                    }
                }
            }
        }
        let mut requirements = Vec::with_capacity(small.codes.len());
        for &c in &small.codes {
            requirements.push(requirements_of(table, &small, c)?);
        }
        Ok(PreparedChecker {
            small,
            star,
            candidates,
            requirements,
        })
    }

    /// Codes `≤ max_code` this checker knows about, ascending.
    pub fn codes(&self) -> &[u64] {
        &self.small.codes
    }

    /// `None` if `Σ(T) ∩ N_s = ∅`; otherwise `Some(k)` for the first witness.
    /// `pairs` must be injective with codes from [`PreparedChecker::codes`].
    pub fn decide(&self, pairs: &[(u64, u64)]) -> Option<u64> {
        let idx: Vec<(usize, usize)> = pairs
            .iter()
            .map(|&(a, v)| (self.small.idx(a), self.small.idx(v)))
            .collect();
        let value_at = |d: usize| idx.iter().find(|&&(a, _)| a == d).map(|&(_, v)| v);
        for &(n, sn) in &idx {
            for &(m, sm) in &idx {
                if let Some(d) = self.star[n][m] {
                    if let Some(sd) = value_at(d) {
                        if self.star[sn][sm] != Some(sd) {
                            return None;
                        }
                    }
                }
            }
        }
        let gens: Vec<(usize, usize)> = pairs
            .iter()
            .zip(&idx)
            .filter(|((a, _), _)| a % 3 == 1)
            .map(|((a, _), &(_, v))| ((a / 3) as usize, v))
            .collect();
        if gens.is_empty() {
            return Some(0);
        }
        self.candidates
            .iter()
            .find(|(images, _)| gens.iter().all(|&(i, v)| images[i] == Some(v)))
            .map(|&(_, k)| k)
    }

    /// See [`subword_closed`].
    pub fn subword_closed(&self, pairs: &[(u64, u64)]) -> bool {
        pairs.iter().all(|&(a, _)| {
            self.requirements[self.small.idx(a)]
                .iter()
                .all(|&need| pairs.iter().any(|&(b, _)| self.small.idx(b) == need))
        })
    }
}

fn requirements_of(table: &mut CodingTable, small: &SmallCodes, code: u64) -> Result<Vec<usize>> {
    Ok(requirements(table, code)?
        .into_iter()
        .map(|c| small.idx(c))
        .collect())
}

/// The code action of every canonical automorphism with `|t| ≤ bound` on the
/// codes `≤ max_code`, for sweeps against [`PreparedChecker`].
#[derive(Clone, Debug)]
pub struct PreparedOracle {
    small: SmallCodes,
    actions: Vec<Vec<Option<usize>>>,
}

impl PreparedOracle {
    pub fn new(table: &mut CodingTable, max_code: u64, bound: usize) -> Result<PreparedOracle> {
        let small = SmallCodes::new(table, max_code)?;
        let n = table.graph().n();
        let reps: Vec<Word> = small
            .codes
            .iter()
            .map(|&c| table.registered_word(c).expect("registered").clone())
            .collect();
        let auts = graphrel::automorphisms(table.graph());
        let mut actions: Vec<Vec<Option<usize>>> = Vec::new();
        for t in Word::all_up_to(n, bound) {
            for rho in &auts {
                for epsilon in [1i8, -1] {
                    let gm = CanonicalAuto {
                        rho: rho.clone(),
                        epsilon,
                        t: t.clone(),
                    }
                    .generator_map();
                    let mut action = Vec::with_capacity(reps.len());
                    for w in &reps {
                        action.push(small.small(table.lookup(&gm.apply(w))?));
                    }
                    if !actions.contains(&action) {
                        actions.push(action);
                    }
                }
            }
        }
        Ok(PreparedOracle { small, actions })
    }

    pub fn extends(&self, pairs: &[(u64, u64)]) -> bool {
        let idx: Vec<(usize, usize)> = pairs
            .iter()
            .map(|&(a, v)| (self.small.idx(a), self.small.idx(v)))
            .collect();
        self.actions
            .iter()
            .any(|action| idx.iter().all(|&(a, v)| action[a] == Some(v)))
    }
}
