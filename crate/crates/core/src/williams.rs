//! The graph-to-group reduction `T ↦ G_T` and homomorphisms between such groups.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::freegroup::{Letter, Word};
use crate::graphrel;
use crate::presentation::Presentation;

pub use crate::graph::Graph;

pub const GENERATOR_EXPONENT: i64 = 7;
pub const EDGE_EXPONENT: i64 = 11;
pub const NON_EDGE_EXPONENT: i64 = 13;

/// `⟨v_0..v_{n-1} | v_i^7, (v_i v_j)^11 on edges, (v_i v_j)^13 on non-edges⟩`.
pub fn relators_from_graph(t: &Graph) -> Presentation {
    let n = t.n();
    let mut seeds: Vec<Word> = (0..n)
        .map(|i| Word::generator(i as u32).pow(GENERATOR_EXPONENT))
        .collect();
    for i in 0..n {
        for j in i + 1..n {
            let e = if t.adjacent(i, j) {
                EDGE_EXPONENT
            } else {
                NON_EDGE_EXPONENT
            };
            let pair = Word::from_iter([Letter::gen(i as u32), Letter::gen(j as u32)]);
            seeds.push(pair.pow(e));
        }
    }
    Presentation::new(n, seeds).expect("seeds only use generators below n")
}

/// Images of the generators; extends multiplicatively to all words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMap {
    pub images: Vec<Word>,
}

impl GeneratorMap {
    pub fn new(images: Vec<Word>) -> GeneratorMap {
        GeneratorMap { images }
    }

    pub fn identity(n: usize) -> GeneratorMap {
        GeneratorMap {
            images: (0..n as u32).map(Word::generator).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Panics if `w` uses a generator the map has no image for.
    pub fn apply(&self, w: &Word) -> Word {
        let mut out = Vec::new();
        for &l in w.letters() {
            let img = &self.images[l.index() as usize];
            if l.is_inverse() {
                out.extend(img.letters().iter().rev().map(|x| x.inverse()));
            } else {
                out.extend_from_slice(img.letters());
            }
        }
        Word::reduce(out)
    }

    /// `self` after `first`: `v ↦ self(first(v))`.
    pub fn compose(&self, first: &GeneratorMap) -> GeneratorMap {
        GeneratorMap {
            images: first.images.iter().map(|w| self.apply(w)).collect(),
        }
    }

    pub fn conjugate_by(&self, c: &Word) -> GeneratorMap {
        GeneratorMap {
            images: self.images.iter().map(|w| w.conjugate_by(c)).collect(),
        }
    }
}

impl fmt::Display for GeneratorMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.images.iter().enumerate() {
            writeln!(f, "{i} {w}")?;
        }
        Ok(())
    }
}

impl FromStr for GeneratorMap {
    type Err = Error;

    /// Lines `<i> <word>` for every generator `i` of the source group, any order.
    fn from_str(text: &str) -> Result<GeneratorMap> {
        let mut images: Vec<Option<Word>> = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let bad = |message: String| Error::MapFormat { line, message };
            let (head, rest) = trimmed
                .split_once(char::is_whitespace)
                .ok_or_else(|| bad("expected `<i> <word>`".into()))?;
            let i: usize = head
                .parse()
                .map_err(|_| bad(format!("bad generator index `{head}`")))?;
            let w: Word = rest.parse().map_err(|e| bad(format!("{e}")))?;
            if images.len() <= i {
                images.resize(i + 1, None);
            }
            if images[i].replace(w).is_some() {
                return Err(bad(format!("generator {i} given twice")));
            }
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, w)| {
                w.ok_or(Error::MapFormat {
                    line: 0,
                    message: format!("no image for generator {i}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GeneratorMap { images })
    }
}

fn check_injection(map: &[usize], codomain: usize) -> Result<()> {
    for (i, &m) in map.iter().enumerate() {
        if m >= codomain {
            return Err(Error::VertexOutOfRange {
                vertex: m,
                n: codomain,
            });
        }
        if map[..i].contains(&m) {
            return Err(Error::InvalidMap(format!("vertex {m} is hit twice")));
        }
    }
    Ok(())
}

/// `i ↦ t · v_{map(i)}^ε · t⁻¹`.
pub fn induced_hom(
    t_graph: &Graph,
    s_graph: &Graph,
    map: &[usize],
    epsilon: i8,
    t: &Word,
) -> Result<GeneratorMap> {
    if map.len() != t_graph.n() {
        return Err(Error::InvalidMap(format!(
            "expected {} images, got {}",
            t_graph.n(),
            map.len()
        )));
    }
    check_injection(map, s_graph.n())?;
    let images = map
        .iter()
        .map(|&m| Word::letter(Letter::new(m as u32, epsilon)).conjugate_by(t))
        .collect();
    Ok(GeneratorMap { images })
}

/// Every defining relator of `pt` maps to the identity of `ps`.
pub fn is_homomorphism(pt: &Presentation, ps: &Presentation, gm: &GeneratorMap) -> Result<bool> {
    if gm.len() != pt.alphabet_size() {
        return Ok(false);
    }
    if gm.images.iter().any(|w| {
        w.max_index()
            .is_some_and(|i| i as usize >= ps.alphabet_size())
    }) {
        return Ok(false);
    }
    for seed in pt.seeds() {
        if !ps.is_identity(&gm.apply(seed))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// No two words of length ≤ `l` that differ in `G_T` are identified in `G_S`.
///
/// Equivalently: every reduced word of length ≤ 2l that is nontrivial in `G_T`
/// has a nontrivial image, since `w1 ≠ w2` iff `w1 w2⁻¹ ≠ e`.
pub fn check_injective_up_to(
    pt: &Presentation,
    ps: &Presentation,
    gm: &GeneratorMap,
    l: usize,
) -> Result<bool> {
    for w in Word::all_up_to(pt.alphabet_size(), 2 * l) {
        // a word Dehn can shorten equals a shorter one, which is checked anyway
        if w.is_empty() || pt.dehn_reduce(&w)? != w {
            continue;
        }
        if ps.is_identity(&gm.apply(&w))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `θ(v_i) = t v_{ρ(i)}^ε t⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalAuto {
    pub rho: Vec<usize>,
    pub epsilon: i8,
    pub t: Word,
}

impl CanonicalAuto {
    pub fn generator_map(&self) -> GeneratorMap {
        let images = self
            .rho
            .iter()
            .map(|&r| Word::letter(Letter::new(r as u32, self.epsilon)).conjugate_by(&self.t))
            .collect();
        GeneratorMap { images }
    }
}

impl fmt::Display for CanonicalAuto {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rho: Vec<String> = self.rho.iter().map(|r| r.to_string()).collect();
        write!(
            f,
            "rho: {}\nepsilon: {}\nt: {}",
            rho.join(" "),
            self.epsilon,
            self.t
        )
    }
}

/// A conjugator long enough for every image: `|t v t⁻¹| = 2|t| + 1` without cancellation.
pub fn default_conjugator_bound(gm: &GeneratorMap) -> usize {
    gm.images
        .iter()
        .map(|w| w.len().saturating_sub(1) / 2)
        .max()
        .unwrap_or(0)
}

/// Searches ρ ∈ Aut(T) (lexicographic), then ε = +1 before −1, then `t` in
/// shortlex with `|t| ≤ bound` for `gm(i) = t v_{ρ(i)}^ε t⁻¹` in `G_T`.
pub fn aut_canonical_check(
    t_graph: &Graph,
    gm: &GeneratorMap,
    bound: usize,
) -> Result<Option<CanonicalAuto>> {
    let n = t_graph.n();
    if gm.len() != n {
        return Ok(None);
    }
    let pt = relators_from_graph(t_graph);
    let conjugators = Word::all_up_to(n, bound);
    for rho in graphrel::automorphisms(t_graph) {
        for epsilon in [1i8, -1] {
            'conj: for t in &conjugators {
                for (i, &r) in rho.iter().enumerate() {
                    let target = Word::letter(Letter::new(r as u32, epsilon)).conjugate_by(t);
                    if !pt.equal(&gm.images[i], &target)? {
                        continue 'conj;
                    }
                }
                return Ok(Some(CanonicalAuto {
                    rho,
                    epsilon,
                    t: t.clone(),
                }));
            }
        }
    }
    Ok(None)
}

/// The least permutation ρ whose induced map `G_T → G_S` is a homomorphism
/// with a two-sided inverse induced by ρ⁻¹, checked at the group level.
pub fn iso_search(t_graph: &Graph, s_graph: &Graph) -> Result<Option<(Vec<usize>, i8)>> {
    let n = t_graph.n();
    if n != s_graph.n() {
        return Ok(None);
    }
    let pt = relators_from_graph(t_graph);
    let ps = relators_from_graph(s_graph);
    for rho in graphrel::injections(n, n) {
        let mut inv = vec![0; n];
        for (i, &r) in rho.iter().enumerate() {
            inv[r] = i;
        }
        let forward = induced_hom(t_graph, s_graph, &rho, 1, &Word::identity())?;
        let backward = induced_hom(s_graph, t_graph, &inv, 1, &Word::identity())?;
        if !is_homomorphism(&pt, &ps, &forward)? || !is_homomorphism(&ps, &pt, &backward)? {
            continue;
        }
        if is_identity_on_generators(&pt, &backward.compose(&forward))?
            && is_identity_on_generators(&ps, &forward.compose(&backward))?
        {
            return Ok(Some((rho, 1)));
        }
    }
    Ok(None)
}

fn is_identity_on_generators(p: &Presentation, gm: &GeneratorMap) -> Result<bool> {
    for (i, w) in gm.images.iter().enumerate() {
        if !p.equal(w, &Word::generator(i as u32))? {
            return Ok(false);
        }
    }
    Ok(true)
}
