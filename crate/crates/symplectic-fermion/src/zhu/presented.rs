//! The finitely presented associative algebra on {W, E, H, F} with W
//! central, W-powers bounded by the degree-5 polynomial, quadratic letter
//! products rewritten by the d = 1 Zhu relations, and (W-1)(8W-3)
//! annihilating every letter.
//!
//! The engine closes the word set under multiplication with linear
//! reduction, which yields the eleven normal-form words
//! 1, W, W^2, W^3, W^4, E, WE, H, WH, F, WF. Spanning bounds the
//! dimension above by 11; the dimension is exactly 11 because the
//! reduction rules assemble an associative multiplication table on those
//! eleven words that satisfies all the defining relations, so the
//! presented algebra maps onto an 11-dimensional algebra.

use std::collections::{BTreeMap, BTreeSet};

use num::{One, Zero};

use crate::scalar::{int, rat, Scalar};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Letter {
    E,
    H,
    F,
}

impl Letter {
    fn name(self) -> &'static str {
        match self {
            Letter::E => "E",
            Letter::H => "H",
            Letter::F => "F",
        }
    }
}

/// Normal-form word: `W^w_pow` or `W^w_pow * letter` (letter power one).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Word {
    pub letter: Option<Letter>,
    pub w_pow: u8,
}

impl Word {
    pub fn one() -> Word {
        Word {
            letter: None,
            w_pow: 0,
        }
    }

    pub fn display(&self) -> String {
        let mut s = String::new();
        match self.w_pow {
            0 => {}
            1 => s.push('W'),
            p => s.push_str(&format!("W^{}", p)),
        }
        if let Some(l) = self.letter {
            s.push_str(l.name());
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }
}

/// Element: rational combination of normal-form words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Elem(pub BTreeMap<Word, Scalar>);

impl Elem {
    pub fn zero() -> Elem {
        Elem(BTreeMap::new())
    }

    pub fn word(w: Word) -> Elem {
        let mut m = BTreeMap::new();
        m.insert(w, Scalar::one());
        Elem(m)
    }

    pub fn one() -> Elem {
        Elem::word(Word::one())
    }

    pub fn w() -> Elem {
        Elem::word(Word {
            letter: None,
            w_pow: 1,
        })
    }

    pub fn letter(l: Letter) -> Elem {
        Elem::word(Word {
            letter: Some(l),
            w_pow: 0,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.0.entry(w).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.0.remove(&w);
        }
    }

    pub fn add(&self, other: &Elem) -> Elem {
        let mut out = self.clone();
        for (w, c) in &other.0 {
            out.add_term(*w, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Elem) -> Elem {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> Elem {
        if c.is_zero() {
            return Elem::zero();
        }
        Elem(self.0.iter().map(|(w, x)| (*w, x * c)).collect())
    }

    pub fn mul(&self, other: &Elem) -> Elem {
        let mut out = Elem::zero();
        for (wa, ca) in &self.0 {
            for (wb, cb) in &other.0 {
                out = out.add(&word_mul(*wa, *wb).scale(&(ca * cb)));
            }
        }
        out
    }

    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.0
            .iter()
            .map(|(w, c)| format!("({}) {}", crate::scalar::fmt_scalar(c), w.display()))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Reduce `W^p` (pure) against 64 W^5 = 80 W^4 - 13 W^3 - 3 W^2.
fn reduce_pure_power(p: u8) -> Elem {
    if p <= 4 {
        return Elem::word(Word {
            letter: None,
            w_pow: p,
        });
    }
    let lower = reduce_pure_power(p - 5);
    let mut corr = Elem::zero();
    for (q, c) in [(4u8, rat(80, 64)), (3, rat(-13, 64)), (2, rat(-3, 64))] {
        corr.add_term(
            Word {
                letter: None,
                w_pow: q,
            },
            c,
        );
    }
    lower.mul_assuming_pure(&corr)
}

impl Elem {
    /// Product of two pure-W elements (exponents add, then reduce).
    fn mul_assuming_pure(&self, other: &Elem) -> Elem {
        let mut out = Elem::zero();
        for (wa, ca) in &self.0 {
            for (wb, cb) in &other.0 {
                out = out.add(&reduce_pure_power(wa.w_pow + wb.w_pow).scale(&(ca * cb)));
            }
        }
        out
    }
}

/// Reduce `W^p * letter` against 8 W^2 X = (11 W - 3) X.
fn reduce_letter_power(p: u8, l: Letter) -> Elem {
    if p <= 1 {
        return Elem::word(Word {
            letter: Some(l),
            w_pow: p,
        });
    }
    let a = reduce_letter_power(p - 1, l);
    let b = reduce_letter_power(p - 2, l);
    a.scale(&rat(11, 8)).add(&b.scale(&rat(-3, 8)))
}

/// Attach `W^p` to every word of an element, reducing powers.
fn w_shift(e: &Elem, p: u8) -> Elem {
    let mut out = Elem::zero();
    for (w, c) in &e.0 {
        let total = w.w_pow + p;
        let reduced = match w.letter {
            None => reduce_pure_power(total),
            Some(l) => reduce_letter_power(total, l),
        };
        out = out.add(&reduced.scale(c));
    }
    out
}

/// The quadratic letter rewriting rules.
fn letter_mul(a: Letter, b: Letter) -> Elem {
    use Letter::*;
    let w = |p: u8| Word {
        letter: None,
        w_pow: p,
    };
    let wl = |p: u8, l: Letter| Word {
        letter: Some(l),
        w_pow: p,
    };
    let mut out = Elem::zero();
    match (a, b) {
        (E, E) | (F, F) => {}
        (H, H) => {
            // (1/9)(8 W^3 + W^2)
            out.add_term(w(3), rat(8, 9));
            out.add_term(w(2), rat(1, 9));
        }
        (H, E) => {
            out.add_term(wl(1, E), rat(6, 5));
            out.add_term(wl(0, E), rat(-1, 5));
        }
        (E, H) => {
            out.add_term(wl(1, E), rat(-6, 5));
            out.add_term(wl(0, E), rat(1, 5));
        }
        (H, F) => {
            out.add_term(wl(1, F), rat(-6, 5));
            out.add_term(wl(0, F), rat(1, 5));
        }
        (F, H) => {
            out.add_term(wl(1, F), rat(6, 5));
            out.add_term(wl(0, F), rat(-1, 5));
        }
        (E, F) => {
            out.add_term(wl(1, H), rat(-12, 5));
            out.add_term(wl(0, H), rat(2, 5));
            out.add_term(w(3), rat(-16, 9));
            out.add_term(w(2), rat(-2, 9));
        }
        (F, E) => {
            out.add_term(wl(1, H), rat(12, 5));
            out.add_term(wl(0, H), rat(-2, 5));
            out.add_term(w(3), rat(-16, 9));
            out.add_term(w(2), rat(-2, 9));
        }
    }
    out
}

/// Full normal-form product of two words: W is central, letters rewrite
/// quadratically, W-powers reduce.
pub fn word_mul(a: Word, b: Word) -> Elem {
    let p = a.w_pow + b.w_pow;
    let core = match (a.letter, b.letter) {
        (None, None) => return reduce_pure_power(p),
        (Some(l), None) | (None, Some(l)) => return reduce_letter_power(p, l),
        (Some(la), Some(lb)) => letter_mul(la, lb),
    };
    w_shift(&core, p)
}

/// The assembled algebra: the closed word set (expected eleven words)
/// plus verifications that the table is associative and satisfies every
/// defining relation.
pub struct PresentedAlgebra {
    pub basis: Vec<Word>,
}

impl PresentedAlgebra {
    /// Close the generator words under multiplication with reduction; the
    /// result is the normal-form basis.
    pub fn build() -> PresentedAlgebra {
        let mut words: BTreeSet<Word> = BTreeSet::new();
        words.insert(Word::one());
        words.insert(Word {
            letter: None,
            w_pow: 1,
        });
        for l in [Letter::E, Letter::H, Letter::F] {
            words.insert(Word {
                letter: Some(l),
                w_pow: 0,
            });
        }
        loop {
            let snapshot: Vec<Word> = words.iter().cloned().collect();
            let mut grew = false;
            for a in &snapshot {
                for b in &snapshot {
                    for w in word_mul(*a, *b).0.keys() {
                        if words.insert(*w) {
                            grew = true;
                        }
                    }
                }
            }
            if !grew {
                break;
            }
        }
        PresentedAlgebra {
            basis: words.into_iter().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of an element over the closed word basis.
    pub fn coords(&self, e: &Elem) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.basis.len()];
        for (w, c) in &e.0 {
            let idx = self
                .basis
                .iter()
                .position(|x| x == w)
                .expect("word outside the closed basis");
            v[idx] = c.clone();
        }
        v
    }

    /// Associativity of the reduced product on all basis triples.
    pub fn associativity_holds(&self) -> bool {
        for a in &self.basis {
            let ea = Elem::word(*a);
            for b in &self.basis {
                let eb = Elem::word(*b);
                let ab = ea.mul(&eb);
                for c in &self.basis {
                    let ec = Elem::word(*c);
                    if ab.mul(&ec) != ea.mul(&eb.mul(&ec)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Every defining relation, evaluated in the table algebra.
    pub fn defining_relations_hold(&self) -> Vec<(String, bool)> {
        let w = Elem::w();
        let e = Elem::letter(Letter::E);
        let h = Elem::letter(Letter::H);
        let f = Elem::letter(Letter::F);
        let one = Elem::one();
        let poly = |cs: &[(i64, i64)]| {
            // product of linear factors (a W + b)
            let mut acc = Elem::one();
            for (a, b) in cs {
                acc = acc.mul(&w.scale(&int(*a)).add(&one.scale(&int(*b))));
            }
            acc
        };
        let w2_8w1 = w.mul(&w).mul(&w.scale(&int(8)).add(&one));
        let six_w_1 = w.scale(&int(6)).sub(&one);
        let mut out = Vec::new();
        out.push((
            "W^2(8W+1)(W-1)(8W-3) = 0".to_string(),
            w.mul(&w).mul(&poly(&[(8, 1), (1, -1), (8, -3)])).is_zero(),
        ));
        for (name, x) in [("E", &e), ("H", &h), ("F", &f)] {
            out.push((
                format!("(W-1)(8W-3){} = 0", name),
                poly(&[(1, -1), (8, -3)]).mul(x).is_zero(),
            ));
            out.push((
                format!("W central on {}", name),
                w.mul(x).sub(&x.mul(&w)).is_zero(),
            ));
        }
        out.push(("E^2 = 0".to_string(), e.mul(&e).is_zero()));
        out.push(("F^2 = 0".to_string(), f.mul(&f).is_zero()));
        out.push((
            "H^2 = (1/9)W^2(8W+1)".to_string(),
            h.mul(&h).sub(&w2_8w1.scale(&rat(1, 9))).is_zero(),
        ));
        out.push((
            "HE = (1/5)(6W-1)E".to_string(),
            h.mul(&e).sub(&six_w_1.mul(&e).scale(&rat(1, 5))).is_zero(),
        ));
        out.push((
            "EH = -(1/5)(6W-1)E".to_string(),
            e.mul(&h).add(&six_w_1.mul(&e).scale(&rat(1, 5))).is_zero(),
        ));
        out.push((
            "HF = -(1/5)(6W-1)F".to_string(),
            h.mul(&f).add(&six_w_1.mul(&f).scale(&rat(1, 5))).is_zero(),
        ));
        out.push((
            "FH = (1/5)(6W-1)F".to_string(),
            f.mul(&h).sub(&six_w_1.mul(&f).scale(&rat(1, 5))).is_zero(),
        ));
        out.push((
            "EF = -(2/5)(6W-1)H - (2/9)W^2(8W+1)".to_string(),
            e.mul(&f)
                .add(&six_w_1.mul(&h).scale(&rat(2, 5)))
                .add(&w2_8w1.scale(&rat(2, 9)))
                .is_zero(),
        ));
        out.push((
            "FE = (2/5)(6W-1)H - (2/9)W^2(8W+1)".to_string(),
            f.mul(&e)
                .sub(&six_w_1.mul(&h).scale(&rat(2, 5)))
                .add(&w2_8w1.scale(&rat(2, 9)))
                .is_zero(),
        ));
        out
    }
}

/// The three central idempotent-related elements.
pub fn idempotent_v0() -> Elem {
    // -(1/9)(13W-3)(W-1)(8W+1)(8W-3)
    lin(13, -3)
        .mul(&lin(1, -1))
        .mul(&lin(8, 1))
        .mul(&lin(8, -3))
        .scale(&rat(-1, 9))
}

pub fn nilpotent_w0() -> Elem {
    Elem::w().mul(&lin(1, -1)).mul(&lin(8, 1)).mul(&lin(8, -3))
}

pub fn idempotent_v18() -> Elem {
    let w = Elem::w();
    w.mul(&w)
        .mul(&lin(1, -1))
        .mul(&lin(8, -3))
        .scale(&rat(128, 9))
}

fn lin(a: i64, b: i64) -> Elem {
    Elem::w().scale(&int(a)).add(&Elem::one().scale(&int(b)))
}

/// The A, B, C, D quadruple of one lambda-block.
pub fn abcd(lambda_is_one: bool) -> [Elem; 4] {
    let w = Elem::w();
    let e = Elem::letter(Letter::E);
    let h = Elem::letter(Letter::H);
    let f = Elem::letter(Letter::F);
    if lambda_is_one {
        let pref = lin(8, -3).scale(&rat(1, 10));
        [
            w.mul(&w)
                .mul(&lin(8, 1))
                .mul(&lin(8, -3))
                .scale(&rat(1, 90)),
            pref.mul(&h),
            pref.mul(&e),
            pref.mul(&f),
        ]
    } else {
        let pref = lin(1, -1).scale(&rat(-16, 5));
        [
            w.mul(&w)
                .mul(&lin(8, 1))
                .mul(&lin(1, -1))
                .scale(&rat(-64, 45)),
            pref.mul(&h),
            pref.mul(&e),
            pref.mul(&f),
        ]
    }
}

/// The sixteen expected products of the block table, rows A, B, C, D.
pub fn table1_expected(abcd: &[Elem; 4]) -> [[Elem; 4]; 4] {
    let [a, b, c, d] = abcd;
    let half = rat(1, 2);
    let neg = |x: &Elem| x.scale(&-Scalar::one());
    [
        [
            a.scale(&half),
            b.scale(&half),
            c.scale(&half),
            d.scale(&half),
        ],
        [
            b.scale(&half),
            a.scale(&half),
            c.scale(&half),
            neg(&d.scale(&half)),
        ],
        [
            c.scale(&half),
            neg(&c.scale(&half)),
            Elem::zero(),
            neg(a).sub(b),
        ],
        [d.scale(&half), d.scale(&half), neg(a).add(b), Elem::zero()],
    ]
}

/// Check the sixteen products of one block; returns failures.
pub fn table1_check(lambda_is_one: bool) -> Vec<String> {
    let quad = abcd(lambda_is_one);
    let expected = table1_expected(&quad);
    let names = ["A", "B", "C", "D"];
    let mut failures = Vec::new();
    for (i, x) in quad.iter().enumerate() {
        for (j, y) in quad.iter().enumerate() {
            if x.mul(y) != expected[i][j] {
                failures.push(format!(
                    "lambda={} {}*{}: got {}",
                    if lambda_is_one { "1" } else { "3/8" },
                    names[i],
                    names[j],
                    x.mul(y).display()
                ));
            }
        }
    }
    failures
}

/// Matrix units of one block: v11 = A+B, v12 = -C, v21 = D, v22 = A-B.
/// (The sign pattern is forced by the block table: (A+B)^2 = A+B,
/// (-C)*D = A+B and D*(-C) = A-B; the variant -A-B squares to its own
/// negative and cannot be a matrix unit.)
pub fn matrix_units(lambda_is_one: bool) -> [[Elem; 2]; 2] {
    let [a, b, c, d] = abcd(lambda_is_one);
    let neg = |x: &Elem| x.scale(&-Scalar::one());
    [[a.add(&b), neg(&c)], [d.clone(), a.sub(&b)]]
}

/// v^{ij} v^{kl} = delta_{jk} v^{il} over one block; returns failures.
pub fn matrix_units_check(lambda_is_one: bool) -> Vec<String> {
    let v = matrix_units(lambda_is_one);
    let mut failures = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    let got = v[i][j].mul(&v[k][l]);
                    let expect = if j == k {
                        v[i][l].clone()
                    } else {
                        Elem::zero()
                    };
                    if got != expect {
                        failures.push(format!(
                            "lambda={} v{}{} v{}{}",
                            if lambda_is_one { "1" } else { "3/8" },
                            i + 1,
                            j + 1,
                            k + 1,
                            l + 1
                        ));
                    }
                }
            }
        }
    }
    failures
}

/// The four-ideal decomposition report.
pub struct IdealReport {
    pub dims: [usize; 4],
    pub pairwise_zero: bool,
    pub direct_sum_rank: usize,
    pub unit_decomposes: bool,
    pub idempotent_identities: Vec<(String, bool)>,
}

pub fn ideal_decomposition(alg: &PresentedAlgebra) -> IdealReport {
    let v0 = idempotent_v0();
    let w0 = nilpotent_w0();
    let v18 = idempotent_v18();
    let a1 = abcd(true);
    let a38 = abcd(false);
    let spans: [Vec<Elem>; 4] = [
        vec![v0.clone(), w0.clone()],
        a1.to_vec(),
        vec![v18.clone()],
        a38.to_vec(),
    ];
    let dims = [
        span_rank(alg, &spans[0]),
        span_rank(alg, &spans[1]),
        span_rank(alg, &spans[2]),
        span_rank(alg, &spans[3]),
    ];
    let mut pairwise_zero = true;
    for (i, si) in spans.iter().enumerate() {
        for (j, sj) in spans.iter().enumerate() {
            if i == j {
                continue;
            }
            for x in si {
                for y in sj {
                    if !x.mul(y).is_zero() {
                        pairwise_zero = false;
                    }
                }
            }
        }
    }
    let all: Vec<Elem> = spans.iter().flatten().cloned().collect();
    let direct_sum_rank = span_rank(alg, &all);
    // 1 = v0 + v_{-1/8} + u_1 + u_{3/8} with block units u_lambda = 2A
    let unit = v0
        .add(&v18)
        .add(&a1[0].scale(&int(2)))
        .add(&a38[0].scale(&int(2)));
    let unit_decomposes = unit == Elem::one();

    let mut idempotent_identities = Vec::new();
    idempotent_identities.push(("v0*v0 = v0".into(), v0.mul(&v0) == v0));
    idempotent_identities.push(("v18*v18 = v18".into(), v18.mul(&v18) == v18));
    idempotent_identities.push(("v0*v18 = 0".into(), v0.mul(&v18).is_zero()));
    idempotent_identities.push(("v18*v0 = 0".into(), v18.mul(&v0).is_zero()));
    idempotent_identities.push(("v0*w0 = w0".into(), v0.mul(&w0) == w0));
    idempotent_identities.push(("w0*v0 = w0".into(), w0.mul(&v0) == w0));
    idempotent_identities.push(("w0^2 = 0".into(), w0.mul(&w0).is_zero()));
    idempotent_identities.push(("v18*w0 = 0".into(), v18.mul(&w0).is_zero()));
    idempotent_identities.push(("w0*v18 = 0".into(), w0.mul(&v18).is_zero()));
    let w = Elem::w();
    idempotent_identities.push(("W^2 v0 = 0".into(), w.mul(&w).mul(&v0).is_zero()));
    idempotent_identities.push(("W w0 = 0".into(), w.mul(&w0).is_zero()));
    idempotent_identities.push((
        "W v18 = -(1/8) v18".into(),
        w.mul(&v18) == v18.scale(&rat(-1, 8)),
    ));
    for l in [Letter::E, Letter::H, Letter::F] {
        let x = Elem::letter(l);
        idempotent_identities.push((
            format!("v0*{0} = w0*{0} = v18*{0} = 0", l.name()),
            v0.mul(&x).is_zero() && w0.mul(&x).is_zero() && v18.mul(&x).is_zero(),
        ));
    }
    IdealReport {
        dims,
        pairwise_zero,
        direct_sum_rank,
        unit_decomposes,
        idempotent_identities,
    }
}

fn span_rank(alg: &PresentedAlgebra, elems: &[Elem]) -> usize {
    let mat: Vec<Vec<Scalar>> = elems.iter().map(|e| alg.coords(e)).collect();
    crate::vertex::dense_rank(mat)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_is_eleven_words() {
        let alg = PresentedAlgebra::build();
        assert_eq!(alg.dim(), 11);
        let names: Vec<String> = alg.basis.iter().map(|w| w.display()).collect();
        for expect in [
            "1", "W", "W^2", "W^3", "W^4", "E", "WE", "H", "WH", "F", "WF",
        ] {
            assert!(names.iter().any(|n| n == expect), "missing word {}", expect);
        }
    }

    #[test]
    fn table_algebra_is_associative_and_satisfies_relations() {
        let alg = PresentedAlgebra::build();
        assert!(alg.associativity_holds());
        for (name, ok) in alg.defining_relations_hold() {
            assert!(ok, "relation failed: {}", name);
        }
    }

    #[test]
    fn idempotents_and_blocks() {
        let alg = PresentedAlgebra::build();
        assert!(table1_check(true).is_empty());
        assert!(table1_check(false).is_empty());
        assert!(matrix_units_check(true).is_empty());
        assert!(matrix_units_check(false).is_empty());
        let report = ideal_decomposition(&alg);
        assert_eq!(report.dims, [2, 4, 1, 4]);
        assert!(report.pairwise_zero);
        assert_eq!(report.direct_sum_rank, 11);
        assert!(report.unit_decomposes);
        for (name, ok) in &report.idempotent_identities {
            assert!(ok, "identity failed: {}", name);
        }
    }
}
