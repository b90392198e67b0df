//! Oracle suites behind the `selftest` command.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::basisgen::{
    basis_set, const_a, f21_norm_sq, in_f21_domain, n2_sq, pn1_bruteforce, pn1_closed, semimax_norm, semimax_poly,
    u2_basis_closed, u3_basis_closed, u3_basis_f21, u4_basis_closed, u4_free_count, BasisPolynomial,
};
use crate::coupling::{
    check_completeness, check_orthogonality, closed_sum, isoscalar_table, param_coefficient, param_expansion,
    racah_threej, solve_k, su2_pattern, su2_threej, su3_table, CouplingTable,
};
use crate::error::Result;
use crate::gelfand::{
    branch_rows, enumerate_fundamental_words, enumerate_patterns, labels_up_to, phi_monomial, weight, weyl_dimension,
    BinaryWord, IrrepLabel,
};
use crate::polyengine::{bargmann_inner, diagonal_degrees, minor, symbolic_matrix, ExactPoly};

/// Golden generating-function fixtures, one `word monomial` per line.
pub const FIXTURE_U3: &str = include_str!("../tests/fixtures/gf_u3.txt");
pub const FIXTURE_U4: &str = include_str!("../tests/fixtures/gf_u4.txt");
pub const FIXTURE_U5: &str = include_str!("../tests/fixtures/gf_u5.txt");

#[derive(Clone, Debug, Default)]
pub struct SuiteResult {
    pub name: &'static str,
    pub group: &'static str,
    pub passed: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    fn new(name: &'static str, group: &'static str) -> Self {
        SuiteResult { name, group, ..Default::default() }
    }

    fn check(&mut self, ok: bool, key: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failures.push(key());
        }
    }

    fn record(&mut self, r: Result<()>, key: impl FnOnce() -> String) {
        match r {
            Ok(()) => self.passed += 1,
            Err(e) => self.failures.push(format!("{}: {e}", key())),
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub suites: Vec<SuiteResult>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.suites.iter().all(SuiteResult::ok)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.suites {
            let tag = if s.ok() { "PASS" } else { "FAIL" };
            writeln!(f, "{tag} {:<16} {} passed, {} failed", s.name, s.passed, s.failures.len())?;
            for k in s.failures.iter().take(20) {
                writeln!(f, "     {k}")?;
            }
        }
        Ok(())
    }
}

/// Suite names with their group, in run order.
pub const SUITES: [(&str, &str); 9] = [
    ("dimension", "gelfand"),
    ("fixtures", "gelfand"),
    ("orthonormality", "basis"),
    ("closed-forms", "basis"),
    ("pn1", "basis"),
    ("u4-free", "basis"),
    ("kernel", "basis"),
    ("su2", "su2"),
    ("su3", "su3"),
];

/// Runs the suites whose name or group equals `filter` (all when `None`).
pub fn run(filter: Option<&str>, jobs: Option<usize>) -> Report {
    let mut report = Report::default();
    for (name, group) in SUITES {
        if filter.is_some_and(|f| f != name && f != group) {
            continue;
        }
        let r = match name {
            "dimension" => dimension(5, 4),
            "fixtures" => fixtures(&[(3, FIXTURE_U3), (4, FIXTURE_U4), (5, FIXTURE_U5)]),
            "orthonormality" => orthonormality(),
            "closed-forms" => closed_forms(),
            "pn1" => pn1(),
            "u4-free" => u4_free(3),
            "kernel" => kernel_identity(3),
            "su2" => su2(6),
            _ => su3(jobs),
        };
        report.suites.push(r);
    }
    report
}

/// Pattern counts against the Weyl formula for `n ≤ max_n`, `h1 ≤ max_h`.
pub fn dimension(max_n: usize, max_h: i64) -> SuiteResult {
    let mut s = SuiteResult::new("dimension", "gelfand");
    for n in 1..=max_n {
        for l in labels_up_to(n, max_h) {
            let count = BigInt::from(enumerate_patterns(&l).len());
            let dim = weyl_dimension(&l);
            s.check(count == dim, || format!("{l}: {count} patterns, Weyl {dim}"));
        }
    }
    s
}

/// Compares `phi_monomial` with fixture texts; every word of each rank
/// must appear exactly once.
pub fn fixtures(files: &[(usize, &str)]) -> SuiteResult {
    let mut s = SuiteResult::new("fixtures", "gelfand");
    for &(n, text) in files {
        let mut seen = Vec::new();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let Some((w, mono)) = line.split_once(' ') else {
                s.failures.push(format!("u{n}: malformed line {line:?}"));
                continue;
            };
            match w.parse::<BinaryWord>() {
                Ok(word) if word.n() == n => {
                    let got = phi_monomial(&word, 0).to_string();
                    s.check(got == mono.trim(), || format!("u{n} {w}: expected {}, got {got}", mono.trim()));
                    seen.push(word);
                }
                _ => s.failures.push(format!("u{n}: bad word {w:?}")),
            }
        }
        seen.sort();
        let mut all = enumerate_fundamental_words(n);
        all.sort();
        s.check(seen == all, || format!("u{n}: fixture words are not the {} words of rank {n}", all.len()));
    }
    s
}

fn trimmed(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Exact orthonormality of U(2) bases with `h1 ≤ 4` and U(3) bases with
/// `h1 ≤ 3`, weights from column degrees, and the closed norm formulas.
pub fn orthonormality() -> SuiteResult {
    let mut s = SuiteResult::new("orthonormality", "basis");
    for (n, max) in [(2, 4), (3, 3)] {
        for l in labels_up_to(n, max) {
            let set = match basis_set(&l) {
                Ok(v) => v,
                Err(e) => {
                    s.failures.push(format!("{l}: {e}"));
                    continue;
                }
            };
            for (i, a) in set.iter().enumerate() {
                for b in &set[i..] {
                    let g = bargmann_inner(&a.poly, &b.poly);
                    let want = if a.pattern == b.pattern { a.norm_sq.clone() } else { BigRational::zero() };
                    s.check(g == want, || format!("⟨{}, {}⟩ = {g}", a.pattern, b.pattern));
                }
                let deg = diagonal_degrees(&a.poly).map(|d| d.into_iter().map(i64::from).collect());
                s.check(deg.ok() == Some(trimmed(weight(&a.pattern))), || format!("{}: column degrees", a.pattern));
                if n == 2 {
                    let want = n2_sq(&a.pattern).map(|v| v.recip());
                    s.check(want.as_ref() == Ok(&a.norm_sq), || format!("{}: norm against N₂", a.pattern));
                }
                if n == 3 && in_f21_domain(&a.pattern) {
                    let r = u3_basis_f21(&a.pattern)
                        .map(|f| bargmann_inner(&f.poly, &f.poly) == f21_norm_sq(&a.pattern).unwrap_or_default());
                    s.check(r == Ok(true), || format!("{}: norm against N₃", a.pattern));
                }
            }
            if n >= 2 {
                for row in branch_rows(l.h()) {
                    let r = semimax_poly(&l, &row).and_then(|p| Ok(bargmann_inner(&p, &p) == const_a(&l) * semimax_norm(&l, &row)?));
                    s.check(r == Ok(true), || format!("{l} / {row:?}: semimax norm"));
                }
            }
        }
    }
    s
}

fn same(a: Result<BasisPolynomial>, oracle: &BasisPolynomial) -> bool {
    a.is_ok_and(|a| a.same_normalized(oracle))
}

/// Closed forms against the branching-kernel oracle.
pub fn closed_forms() -> SuiteResult {
    let mut s = SuiteResult::new("closed-forms", "basis");
    let labels = [vec![2, 1, 0], vec![1, 1, 0, 0], vec![2, 1, 0, 0]];
    for h in labels {
        let l = IrrepLabel::new(h).expect("valid");
        let set = match basis_set(&l) {
            Ok(v) => v,
            Err(e) => {
                s.failures.push(format!("{l}: {e}"));
                continue;
            }
        };
        for o in &set {
            let p = &o.pattern;
            if l.n() == 3 {
                s.check(same(u3_basis_closed(p), o), || format!("{p}: single sum"));
                if in_f21_domain(p) {
                    s.check(same(u3_basis_f21(p).map(BasisPolynomial::sign_normalized), o), || format!("{p}: 2F1"));
                }
            } else {
                s.check(same(u4_basis_closed(p), o), || format!("{p}: U(4) sum"));
            }
        }
    }
    for l in labels_up_to(2, 4) {
        for o in basis_set(&l).unwrap_or_default() {
            s.check(same(u2_basis_closed(&o.pattern), &o), || format!("{}: U(2)", o.pattern));
        }
    }
    s
}

/// Labels of U(n−1) whose consecutive differences run over `0..=max`.
fn pn1_labels(m: usize, max: i64) -> Vec<IrrepLabel> {
    let mut out = Vec::new();
    let k = m - 1;
    let mut e = vec![0i64; k];
    loop {
        let mut h = vec![0i64; m];
        for i in (0..k).rev() {
            h[i] = h[i + 1] + e[i];
        }
        out.push(IrrepLabel::new(h).expect("non-increasing"));
        let mut i = 0;
        loop {
            if i == k {
                return out;
            }
            if e[i] < max {
                e[i] += 1;
                break;
            }
            e[i] = 0;
            i += 1;
        }
    }
}

/// `P_n(1)` closed forms against brute force, exponents `≤ 3` for `n = 3, 4`
/// and `≤ 2` for `n = 5`.
pub fn pn1() -> SuiteResult {
    let mut s = SuiteResult::new("pn1", "basis");
    for (n, max) in [(3, 3), (4, 3), (5, 2)] {
        for l in pn1_labels(n - 1, max) {
            for p in enumerate_patterns(&l) {
                let (a, b) = (pn1_closed(&p), pn1_bruteforce(&p));
                s.check(a.is_ok() && a == b, || format!("n={n} {p}: closed {a:?}, brute force {b:?}"));
            }
        }
    }
    s
}

/// Free-index count of the U(4) system over all patterns with `h1 ≤ max`.
pub fn u4_free(max: i64) -> SuiteResult {
    let mut s = SuiteResult::new("u4-free", "basis");
    for l in labels_up_to(4, max) {
        for p in enumerate_patterns(&l) {
            let c = u4_free_count(&p);
            s.check(c == Ok(5), || format!("{p}: {c:?} free indices"));
        }
    }
    s
}

/// `Σ_p Γ_p(z) Γ_p(u) = A⁻¹ ∏_k Δ_{1..k}(z uᵀ)^{e_k}` for U(2) labels of
/// total degree `≤ max_degree`; `u` lives in slot 1.
pub fn kernel_identity(max_degree: i64) -> SuiteResult {
    let mut s = SuiteResult::new("kernel", "basis");
    let z = symbolic_matrix(2, 0);
    let u = symbolic_matrix(2, 1);
    let zu: Vec<Vec<ExactPoly>> = (0..2)
        .map(|i| (0..2).map(|j| (0..2).fold(ExactPoly::zero(), |acc, c| acc + &z[i][c] * &u[j][c])).collect())
        .collect();
    let d1 = zu[0][0].clone();
    let d12 = minor(&zu, &[1, 2], &[1, 2]).expect("2×2");
    for l in labels_up_to(2, max_degree).into_iter().filter(|l| l.total() <= max_degree) {
        let lhs = basis_set(&l).map(|set| {
            set.iter().fold(ExactPoly::zero(), |acc, b| {
                acc + (&b.poly * &b.in_slot(1)).scale(&b.norm_sq.recip())
            })
        });
        let (e1, e2) = (l.get(1) - l.get(2), l.get(2));
        let rhs = (&d1.pow(e1 as u32) * &d12.pow(e2 as u32)).scale(&const_a(&l).recip());
        s.check(lhs.as_ref() == Ok(&rhs), || format!("{l}: kernel expansion differs"));
    }
    s
}

/// Generating-function 3-j symbols against the Racah formula, `2j ≤ max_two_j`.
pub fn su2(max_two_j: i64) -> SuiteResult {
    let mut s = SuiteResult::new("su2", "su2");
    for j1 in 0..=max_two_j {
        for j2 in 0..=max_two_j {
            for j3 in 0..=max_two_j {
                for m1 in (-j1..=j1).step_by(2) {
                    for m2 in (-j2..=j2).step_by(2) {
                        let m3 = -m1 - m2;
                        if m3.abs() > j3 || (j3 + m3) % 2 != 0 {
                            continue;
                        }
                        let ps = [su2_pattern(j1, m1), su2_pattern(j2, m2), su2_pattern(j3, m3)];
                        let gf = match &ps {
                            [Ok(a), Ok(b), Ok(c)] => su2_threej([a, b, c]),
                            _ => continue,
                        };
                        let want = racah_threej([j1, j2, j3], [m1, m2, m3]);
                        s.check(gf.as_ref() == Ok(&want), || {
                            format!("2j=({j1},{j2},{j3}) 2m=({m1},{m2},{m3}): {gf:?} vs {want}")
                        });
                    }
                }
            }
        }
    }
    s
}

/// First two labels and the third-slot labels of every channel.
pub type Product = ([i64; 3], [i64; 3], Vec<[i64; 3]>);

/// The decompositions checked by the SU(3) suite.
pub fn su3_products() -> Vec<Product> {
    vec![
        ([1, 0, 0], [1, 0, 0], vec![[1, 0, 0], [2, 2, 0]]),
        ([1, 0, 0], [1, 1, 0], vec![[0, 0, 0], [2, 1, 0]]),
        ([2, 1, 0], [2, 1, 0], vec![[0, 0, 0], [2, 1, 0], [3, 0, 0], [3, 3, 0], [4, 2, 0]]),
    ]
}

/// Unitarity, completeness, path agreement and isoscalar factorisation.
pub fn su3(jobs: Option<usize>) -> SuiteResult {
    let mut s = SuiteResult::new("su3", "su3");
    for (a, b, chans) in su3_products() {
        let mut tables: Vec<CouplingTable> = Vec::new();
        for c in &chans {
            let labels = [a, b, *c].map(|h| IrrepLabel::new(h.to_vec()).expect("valid"));
            match su3_table(&labels, jobs) {
                Ok(t) => {
                    path_agreement(&mut s, &labels, &t);
                    let iso = isoscalar_table(&t).map(|_| ());
                    s.record(iso, || format!("{:?}⊗{:?}⊗{:?} isoscalars", a, b, c));
                    tables.push(t);
                }
                Err(e) => s.failures.push(format!("{a:?}⊗{b:?}⊗{c:?}: {e}")),
            }
        }
        s.record(check_orthogonality(&tables).map(|_| ()), || format!("{a:?}⊗{b:?} orthogonality"));
        s.record(check_completeness(&tables).map(|_| ()), || format!("{a:?}⊗{b:?} completeness"));
        let dims: BigInt = tables.iter().map(|t| weyl_dimension(&t.labels[2]) * t.rho_count).sum();
        let want = weyl_dimension(&tables[0].labels[0]) * weyl_dimension(&tables[0].labels[1]);
        s.check(dims == want, || format!("{a:?}⊗{b:?}: channel dimensions sum to {dims}, expected {want}"));
    }
    s
}

/// Closed triple sum equals the parameter-space extraction, key by key, for
/// every `rho` without `W⁸`.
fn path_agreement(s: &mut SuiteResult, labels: &[IrrepLabel; 3], t: &CouplingTable) {
    let Ok(ks) = solve_k(labels) else { return };
    for kv in ks.into_iter().filter(|kv| kv.k[7] == 0) {
        let Ok(exp) = param_expansion(&kv) else { continue };
        for ps in crate::coupling::balanced_triples(labels) {
            let a = closed_sum(&kv, &ps);
            let b = param_coefficient(&exp, &ps);
            s.check(a.as_ref() == Ok(&b), || {
                format!("{} ρ={} {} {} {}: closed {a:?}, expansion {b}", t.labels[2], kv.rho, ps[0], ps[1], ps[2])
            });
        }
    }
}
