//! Fermionic Fock spaces for the three sectors: the untwisted space SF
//! (creation depths in Z_{>=1}), the theta-twisted space SF(theta)
//! (depths in Z_{>=0} + 1/2) and the extended space built on the vacuum
//! 1-hat (depths in Z_{>=0}, zero modes allowed).
//!
//! States are sparse rational combinations of canonical monomials
//! `psi^1(-n_1) ... psi^r(-n_r) |vac>` with the factors strictly ordered:
//! depth descending, then generator e1 < f1 < e2 < f2 < ... The CAR
//! `[psi(m), phi(n)]_+ = m <psi, phi> delta_{m+n,0}` drives the whole
//! mode action.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use crate::scalar::{Half, Scalar};
use crate::symplectic::{form, Gen, HVector};

/// Which Fock space a monomial or state lives in.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Sector {
    /// SF: creation depths 1, 2, 3, ...
    Untwisted,
    /// SF(theta): creation depths 1/2, 3/2, ...
    Twisted,
    /// SF-hat: creation depths 0, 1, 2, ... (zero modes occupy slots)
    Extended,
}

impl Sector {
    /// True if `n` (a creation depth, the positive of the mode subscript)
    /// is on this sector's creation lattice.
    pub fn valid_depth(self, n: Half) -> bool {
        match self {
            Sector::Untwisted => n.is_integer() && n.0 >= 2,
            Sector::Twisted => !n.is_integer() && n.0 >= 1,
            Sector::Extended => n.is_integer() && n.0 >= 0,
        }
    }

    /// True if `m` (a mode subscript of either sign) is on the sector's
    /// full level lattice.
    pub fn valid_mode(self, m: Half) -> bool {
        match self {
            Sector::Untwisted | Sector::Extended => m.is_integer(),
            Sector::Twisted => !m.is_integer(),
        }
    }

    pub fn vacuum_symbol(self) -> &'static str {
        match self {
            Sector::Untwisted => "|0>",
            Sector::Twisted => "|th>",
            Sector::Extended => "|hat>",
        }
    }
}

/// One creation slot: generator plus depth `n` (the monomial factor is
/// `g(-n)` acting on the vacuum).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ModeIndex {
    pub gen: Gen,
    pub depth: Half,
}

impl ModeIndex {
    pub fn new(gen: Gen, depth: Half) -> ModeIndex {
        ModeIndex { gen, depth }
    }

    /// Canonical in-monomial order: depth descending, then generator.
    fn key(&self) -> (i64, u8) {
        (-self.depth.0, self.gen.0)
    }
}

impl PartialOrd for ModeIndex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ModeIndex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for ModeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.gen, -self.depth)
    }
}

/// Canonical signed monomial: strictly increasing factors under the
/// canonical order (no repeats, fermions square to zero).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    pub factors: Vec<ModeIndex>,
}

impl Monomial {
    pub fn vacuum() -> Monomial {
        Monomial {
            factors: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Raw weight: sum of depths (no sector offset).
    pub fn weight(&self) -> Half {
        self.factors.iter().fold(Half::ZERO, |acc, m| acc + m.depth)
    }

    pub fn parity_odd(&self) -> bool {
        self.factors.len() % 2 == 1
    }

    /// Largest depth occurring (Half::ZERO for the vacuum).
    pub fn max_depth(&self) -> Half {
        self.factors.first().map(|m| m.depth).unwrap_or(Half::ZERO)
    }

    /// Number of zero-depth slots (extended sector only).
    pub fn zero_modes(&self) -> usize {
        self.factors
            .iter()
            .filter(|m| m.depth == Half::ZERO)
            .count()
    }

    pub fn display(&self, sector: Sector) -> String {
        let mut s = String::new();
        for m in &self.factors {
            s.push_str(&format!("{} ", m));
        }
        s.push_str(sector.vacuum_symbol());
        s
    }
}

/// Result of canonicalizing a factor list: the signed monomial, or zero
/// when a slot repeats.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Canonical {
    Zero,
    Mono { sign: i8, mono: Monomial },
}

/// Sort a creation-factor list into canonical order, tracking the fermionic
/// sign of the permutation. A repeated slot gives zero. Panics if a depth
/// is off the sector lattice.
pub fn canonicalize(factors: &[ModeIndex], sector: Sector) -> Canonical {
    for m in factors {
        assert!(
            sector.valid_depth(m.depth),
            "depth {} invalid for {:?} creation slot",
            m.depth,
            sector
        );
    }
    let mut v: Vec<ModeIndex> = factors.to_vec();
    // insertion sort, counting swaps: factor lists are short
    let mut swaps: u64 = 0;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j] < v[j - 1] {
            v.swap(j, j - 1);
            swaps += 1;
            j -= 1;
        }
    }
    for w in v.windows(2) {
        if w[0] == w[1] {
            return Canonical::Zero;
        }
    }
    Canonical::Mono {
        sign: if swaps % 2 == 0 { 1 } else { -1 },
        mono: Monomial { factors: v },
    }
}

/// Sparse state: a rational combination of canonical monomials in one
/// sector. Zero coefficients are never stored; iteration order is the
/// canonical monomial order, so results are deterministic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct State {
    pub sector: Sector,
    pub terms: BTreeMap<Monomial, Scalar>,
}

impl State {
    pub fn zero(sector: Sector) -> State {
        State {
            sector,
            terms: BTreeMap::new(),
        }
    }

    pub fn vacuum(sector: Sector) -> State {
        State::monomial(sector, Monomial::vacuum(), Scalar::one())
    }

    pub fn monomial(sector: Sector, mono: Monomial, coeff: Scalar) -> State {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mono, coeff);
        }
        State { sector, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mono: Monomial, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn add(&self, other: &State) -> State {
        assert_eq!(self.sector, other.sector, "sector mismatch in add");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &State) -> State {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> State {
        if c.is_zero() {
            return State::zero(self.sector);
        }
        State {
            sector: self.sector,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Largest raw weight among terms (ZERO for the zero state).
    pub fn max_weight(&self) -> Half {
        self.terms
            .keys()
            .map(|m| m.weight())
            .max()
            .unwrap_or(Half::ZERO)
    }

    /// Largest creation depth occurring in any term.
    pub fn max_depth(&self) -> Half {
        self.terms
            .keys()
            .map(|m| m.max_depth())
            .max()
            .unwrap_or(Half::ZERO)
    }

    /// True if all terms share one raw weight; returns it.
    pub fn homogeneous_weight(&self) -> Option<Half> {
        let mut it = self.terms.keys().map(|m| m.weight());
        let w = it.next()?;
        if it.all(|x| x == w) {
            Some(w)
        } else {
            None
        }
    }

    /// Split into (weight, homogeneous piece) components.
    pub fn weight_components(&self) -> BTreeMap<Half, State> {
        let mut out: BTreeMap<Half, State> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.weight())
                .or_insert_with(|| State::zero(self.sector))
                .add_term(m.clone(), c.clone());
        }
        out
    }

    /// Projection onto one parity.
    pub fn parity_part(&self, odd: bool) -> State {
        State {
            sector: self.sector,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.parity_odd() == odd)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// True if every term has the given parity.
    pub fn has_parity(&self, odd: bool) -> bool {
        self.terms.keys().all(|m| m.parity_odd() == odd)
    }

    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                s.push_str(" + ");
            }
            s.push_str(&format!(
                "({}) {}",
                crate::scalar::fmt_scalar(c),
                m.display(self.sector)
            ));
        }
        s
    }
}

/// Apply the mode `g(m)` to a state. `m` is the actual subscript: `m < 0`
/// creates depth `-m`, `m > 0` annihilates by contraction with coefficient
/// `m <g, g'>`, and `m = 0` in the extended sector occupies a zero-mode
/// slot (it does not annihilate 1-hat). Panics on a level-lattice mismatch.
pub fn apply_mode(g: Gen, m: Half, v: &State) -> State {
    assert!(
        v.sector.valid_mode(m),
        "mode level {} off the {:?} lattice",
        m,
        v.sector
    );
    let creation = m.is_negative() || (m == Half::ZERO && v.sector == Sector::Extended);
    let mut out = State::zero(v.sector);
    for (mono, coeff) in &v.terms {
        if creation {
            let slot = ModeIndex::new(g, -m);
            // insert into canonical position; duplicate slot kills the term
            let pos = mono.factors.partition_point(|x| *x < slot);
            if pos < mono.factors.len() && mono.factors[pos] == slot {
                continue;
            }
            let mut factors = Vec::with_capacity(mono.len() + 1);
            factors.extend_from_slice(&mono.factors[..pos]);
            factors.push(slot);
            factors.extend_from_slice(&mono.factors[pos..]);
            let sign = if pos % 2 == 0 {
                coeff.clone()
            } else {
                -coeff.clone()
            };
            out.add_term(Monomial { factors }, sign);
        } else {
            // annihilator: contract against factors of depth m, signs from
            // anticommuting past earlier factors; the leftover mode kills
            // the vacuum (m > 0 in all sectors; m = 0 kills |0>)
            for (k, slot) in mono.factors.iter().enumerate() {
                if slot.depth != m {
                    continue;
                }
                let pairing = form(g, slot.gen);
                if pairing.is_zero() {
                    continue;
                }
                let mut factors = Vec::with_capacity(mono.len() - 1);
                factors.extend_from_slice(&mono.factors[..k]);
                factors.extend_from_slice(&mono.factors[k + 1..]);
                let mut c = coeff * m.to_scalar() * pairing;
                if k % 2 == 1 {
                    c = -c;
                }
                out.add_term(Monomial { factors }, c);
            }
        }
    }
    out
}

/// Mode of an h-vector, extended linearly over its coordinates.
pub fn apply_vector_mode(psi: &HVector, m: Half, v: &State) -> State {
    let mut out = State::zero(v.sector);
    for (i, c) in psi.coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        out = out.add(&apply_mode(Gen(i as u8), m, v).scale(c));
    }
    out
}

/// All canonical monomials of one raw weight, lexicographically ordered.
/// Weights are half-integers for the twisted sector.
pub fn enumerate_basis(sector: Sector, weight: Half, d: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current: Vec<ModeIndex> = Vec::new();
    // depths are chosen strictly decreasing in (depth, gen) canonical order
    let first_max = weight;
    enumerate_rec(sector, d, weight, first_max, None, &mut current, &mut out);
    out.sort();
    out
}

fn enumerate_rec(
    sector: Sector,
    d: usize,
    remaining: Half,
    max_depth: Half,
    last: Option<ModeIndex>,
    current: &mut Vec<ModeIndex>,
    out: &mut Vec<Monomial>,
) {
    if remaining == Half::ZERO {
        // extended sector may still append zero-mode slots
        match sector {
            Sector::Extended => {
                let start_gen = match last {
                    Some(m) if m.depth == Half::ZERO => m.gen.0 + 1,
                    _ => 0,
                };
                // close here, or add zero slots in increasing generator order
                out.push(Monomial {
                    factors: current.clone(),
                });
                for g in start_gen..(2 * d) as u8 {
                    current.push(ModeIndex::new(Gen(g), Half::ZERO));
                    enumerate_rec(
                        sector,
                        d,
                        remaining,
                        Half::ZERO,
                        Some(ModeIndex::new(Gen(g), Half::ZERO)),
                        current,
                        out,
                    );
                    current.pop();
                    // recursion above already explores longer suffixes; stop
                    // duplicates by only descending, not iterating twice
                }
                return;
            }
            _ => {
                out.push(Monomial {
                    factors: current.clone(),
                });
                return;
            }
        }
    }
    if remaining.is_negative() {
        return;
    }
    // choose the next factor (depth, gen), strictly after `last` in the
    // canonical order, with positive depth <= remaining
    let depth_iter: Vec<Half> = {
        let mut v = Vec::new();
        let mut n = std::cmp::min(max_depth, remaining);
        // align to the sector lattice (consecutive depths differ by 1)
        match sector {
            Sector::Twisted => {
                if n.is_integer() {
                    n = Half(n.0 - 1);
                }
            }
            _ => {
                if !n.is_integer() {
                    n = Half(n.0 - 1);
                }
            }
        }
        while n.is_positive() {
            v.push(n);
            n = Half(n.0 - 2);
        }
        v
    };
    for depth in depth_iter {
        for g in Gen::all(d) {
            let cand = ModeIndex::new(g, depth);
            if let Some(prev) = last {
                if cand <= prev {
                    continue;
                }
            }
            current.push(cand);
            enumerate_rec(
                sector,
                d,
                remaining - depth,
                depth,
                Some(cand),
                current,
                out,
            );
            current.pop();
        }
    }
}

/// Dimension of the given weight space after a parity filter.
pub fn graded_dimension(sector: Sector, parity: Option<bool>, weight: Half, d: usize) -> usize {
    enumerate_basis(sector, weight, d)
        .iter()
        .filter(|m| parity.map(|p| m.parity_odd() == p).unwrap_or(true))
        .count()
}

/// The canonical involution: negates odd-parity coefficients.
pub fn theta(v: &State) -> State {
    State {
        sector: v.sector,
        terms: v
            .terms
            .iter()
            .map(|(m, c)| {
                let c = if m.parity_odd() {
                    -c.clone()
                } else {
                    c.clone()
                };
                (m.clone(), c)
            })
            .collect(),
    }
}
