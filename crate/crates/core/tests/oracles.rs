mod common;

use common::{
    below, divmod, from_codes, gcd, irreducible, monics, mul, phi, poly, sylvester_resultant, trim,
    P,
};
use fqlab_core::experiments::{
    bateman_horn_count, chowla_classical, chowla_interval, count_primes_interval,
    frobenius_distribution, mobius_interval_sum, prime_count_ap, prime_count_total,
    type_distribution_mn,
};
use fqlab_core::*;

fn field(q: u64) -> FieldSpec {
    FieldSpec::from_order(q).unwrap()
}

fn opts() -> RunOptions {
    RunOptions::default()
}

fn small_cases() -> Vec<(u64, usize)> {
    vec![(2, 6), (3, 5), (4, 4), (5, 4), (7, 3), (8, 3), (9, 3)]
}

#[test]
fn irreducibility_matches_trial_division() {
    for (q, max) in small_cases() {
        let f = field(q);
        for d in 1..=max {
            for a in monics(&f, d) {
                let p = poly(&f, &a);
                assert_eq!(
                    is_irreducible(&p).unwrap(),
                    irreducible(&f, &a),
                    "{p} over F_{q}"
                );
            }
        }
    }
}

#[test]
fn factorization_matches_trial_division() {
    for (q, max) in small_cases() {
        let f = field(q);
        for d in 1..=max {
            for a in monics(&f, d) {
                let p = poly(&f, &a);
                let got = factor(&p, 7).unwrap();
                let mut got: Vec<(Vec<u64>, u32)> =
                    got.factors.iter().map(|(g, e)| (g.codes(), *e)).collect();
                let mut want: Vec<(Vec<u64>, u32)> = common::factor(&f, &a)
                    .into_iter()
                    .map(|(g, e)| (g.iter().map(|c| c.code()).collect(), e))
                    .collect();
                got.sort();
                want.sort();
                assert_eq!(got, want, "{p} over F_{q}");
                assert_eq!(mobius(&p).unwrap(), common::mobius(&f, &a));
            }
        }
    }
}

#[test]
fn non_monic_factorization_keeps_unit() {
    let f = field(5);
    let p = Polynomial::parse(&f, "2,4,0,3").unwrap();
    let fac = factor(&p, 1).unwrap();
    assert_eq!(fac.expand(&f), p);
    assert_eq!(fac.unit, f.element(3).unwrap());
}

#[test]
fn prime_counts_match_enumeration() {
    for (q, max) in [(3u64, 4usize), (4, 3), (5, 3)] {
        let f = field(q);
        for n in 1..=max {
            let want = monics(&f, n).iter().filter(|a| irreducible(&f, a)).count();
            let r = prime_count_total(&f, n, &opts()).unwrap();
            assert_eq!(r.observed, want as i128);
            assert_eq!(necklace_count(q, n).unwrap(), want as i128);
        }
    }
}

#[test]
fn resultant_matches_sylvester() {
    for q in [3u64, 4, 5] {
        let f = field(q);
        let polys: Vec<P> = (1..=3)
            .flat_map(|d| {
                below(&f, d + 1)
                    .into_iter()
                    .filter(move |a| a.len() == d + 1)
            })
            .collect();
        for a in polys.iter().step_by(3) {
            for b in polys.iter().step_by(5) {
                let got = poly(&f, a).resultant(&poly(&f, b)).unwrap();
                assert_eq!(
                    got,
                    sylvester_resultant(&f, a, b),
                    "Res({a:?},{b:?}) over F_{q}"
                );
            }
        }
    }
}

#[test]
fn quadratic_discriminant() {
    let f = field(7);
    for a in 1..7u64 {
        for b in 0..7u64 {
            for c in 0..7u64 {
                let p = Polynomial::from_codes(&f, &[c, b, a]).unwrap();
                let want = (b * b + 7 * 7 * 4 - 4 * a * c % 7) % 7;
                assert_eq!(p.discriminant().unwrap().code(), want);
            }
        }
    }
}

#[test]
fn euler_phi_matches_counting() {
    for q in [2u64, 3, 4] {
        let f = field(q);
        for d in 1..=3 {
            for a in monics(&f, d) {
                assert_eq!(euler_phi(&poly(&f, &a)).unwrap(), phi(&f, &a) as u128);
            }
        }
    }
}

fn worked_family(f: &FieldSpec, fl: &str, gl: &str, center: &str, m: usize) -> QuadraticFamily {
    QuadraticFamily::parse(f, fl, gl, center, m).unwrap()
}

/// Specializations enumerated with naive arithmetic.
fn specializations(f: &FieldSpec, fam: &QuadraticFamily) -> Vec<P> {
    let m = fam.interval().radius();
    let center = fam.interval().center().coeffs().to_vec();
    let fc = fam.f().coeffs().to_vec();
    let gc = fam.g().coeffs().to_vec();
    below(f, m + 1)
        .into_iter()
        .map(|a| {
            let mut h = center.clone();
            for (j, c) in a.iter().enumerate() {
                h[j] = f.add(h[j], *c);
            }
            let gh2 = mul(f, &gc, &mul(f, &h, &h));
            let mut out = gh2;
            for (j, c) in fc.iter().enumerate() {
                out[j] = f.add(out[j], *c);
            }
            trim(out)
        })
        .collect()
}

fn families(f: &FieldSpec) -> Vec<QuadraticFamily> {
    vec![
        worked_family(f, "1", "0,1", "0,0,1", 0),
        worked_family(f, "1", "0,1", "0,0,1", 1),
        worked_family(f, "2", "0,1", "0,0,1", 1),
        worked_family(f, "1", "1,0,1", "1,1,1", 1),
        worked_family(f, "0,1", "1,1,1", "0,0,1", 1),
    ]
}

#[test]
fn interval_experiments_match_oracle() {
    for q in [3u64, 5, 7, 9] {
        let f = field(q);
        for fam in families(&f) {
            let specs = specializations(&f, &fam);
            let primes = specs.iter().filter(|a| irreducible(&f, a)).count() as i128;
            let mu: i128 = specs.iter().map(|a| common::mobius(&f, a) as i128).sum();
            let r = count_primes_interval(&fam, &opts()).unwrap();
            assert_eq!(r.observed, primes);
            assert!(r.passed());
            assert_eq!(r.enumerated, q.pow(fam.interval().radius() as u32 + 1));
            let r = mobius_interval_sum(&fam, &opts()).unwrap();
            assert_eq!(r.observed, mu);
            let r = frobenius_distribution(&fam, &opts()).unwrap();
            assert_eq!(r.observed, primes);
            let table = r.table.unwrap();
            let not_sqf = specs
                .iter()
                .filter(|a| common::factor(&f, a).iter().any(|(_, e)| *e > 1))
                .count() as u64;
            assert_eq!(table.not_squarefree, Some(not_sqf));
            for row in &table.rows {
                let want = specs
                    .iter()
                    .filter(|a| {
                        let fs = common::factor(&f, a);
                        fs.iter().all(|(_, e)| *e == 1) && {
                            let mut parts: Vec<usize> =
                                fs.iter().map(|(g, _)| g.len() - 1).collect();
                            parts.sort_unstable_by(|x, y| y.cmp(x));
                            parts == row.class.parts()
                        }
                    })
                    .count() as u64;
                assert_eq!(row.count, want, "class {} over F_{q}", row.class);
            }
        }
    }
}

#[test]
fn two_family_sums_match_oracle() {
    for q in [3u64, 5, 7] {
        let f = field(q);
        let a = worked_family(&f, "1", "0,1", "0,0,1", 1);
        let b = worked_family(&f, "2", "0,1", "0,0,1", 1);
        let sa = specializations(&f, &a);
        let sb = specializations(&f, &b);
        let joint = sa
            .iter()
            .zip(&sb)
            .filter(|(x, y)| irreducible(&f, x) && irreducible(&f, y))
            .count() as i128;
        let r = bateman_horn_count(&[a.clone(), b.clone()], &opts()).unwrap();
        assert_eq!(r.observed, joint);
        for eps in [[1u8, 1], [1, 2], [2, 1]] {
            let want: i128 = sa
                .iter()
                .zip(&sb)
                .map(|(x, y)| {
                    let pw = |m: i8, e: u8| if e == 2 { (m * m) as i128 } else { m as i128 };
                    pw(common::mobius(&f, x), eps[0]) * pw(common::mobius(&f, y), eps[1])
                })
                .sum();
            let r = chowla_interval(&[a.clone(), b.clone()], &eps, &opts()).unwrap();
            assert_eq!(r.observed, want, "eps {eps:?} over F_{q}");
        }
    }
}

#[test]
fn classical_chowla_matches_oracle() {
    for q in [3u64, 5] {
        let f = field(q);
        let n = 3;
        let shifts = [
            from_codes(&f, &[]),
            from_codes(&f, &[1]),
            from_codes(&f, &[0, 1]),
        ];
        let want: i128 = monics(&f, n)
            .iter()
            .map(|m| {
                shifts
                    .iter()
                    .map(|s| {
                        let mut x = m.clone();
                        for (j, c) in s.iter().enumerate() {
                            x[j] = f.add(x[j], *c);
                        }
                        common::mobius(&f, &x) as i128
                    })
                    .product::<i128>()
            })
            .sum();
        let polys: Vec<Polynomial> = shifts
            .iter()
            .map(|s| Polynomial::from_coeffs(&f, s.clone()).unwrap())
            .collect();
        let r = chowla_classical(&f, n, &polys, &[1, 1, 1], &opts()).unwrap();
        assert_eq!(r.observed, want);
    }
}

#[test]
fn arithmetic_progressions_match_oracle() {
    let f = field(3);
    let qq = from_codes(&f, &[1, 0, 1]);
    for n in 1..=4 {
        for a in below(&f, 2) {
            if gcd(&f, &a, &qq).len() != 1 {
                continue;
            }
            let want = monics(&f, n)
                .iter()
                .filter(|m| irreducible(&f, m) && divmod(&f, m, &qq).1 == a)
                .count() as i128;
            let r = prime_count_ap(&f, n, &poly(&f, &qq), &poly(&f, &a), &opts()).unwrap();
            assert_eq!(r.observed, want);
        }
    }
}

#[test]
fn type_distribution_matches_oracle() {
    let f = field(3);
    let r = type_distribution_mn(&f, 4, &opts()).unwrap();
    let table = r.table.unwrap();
    for row in &table.rows {
        let want = monics(&f, 4)
            .iter()
            .filter(|a| {
                let mut parts: Vec<usize> = common::factor(&f, a)
                    .iter()
                    .flat_map(|(g, e)| std::iter::repeat_n(g.len() - 1, *e as usize))
                    .collect();
                parts.sort_unstable_by(|x, y| y.cmp(x));
                parts == row.class.parts()
            })
            .count() as u64;
        assert_eq!(row.count, want);
    }
    assert_eq!(table.total(), 81);
}

#[test]
fn mobius_discriminant_identity_exhaustive() {
    for q in [3u64, 5, 7, 9] {
        let f = field(q);
        let max = if q <= 5 { 4 } else { 3 };
        for d in 1..=max {
            for a in monics(&f, d) {
                let p = poly(&f, &a);
                if p.derivative().is_zero() {
                    assert_eq!(mobius_via_discriminant(&p).unwrap_err(), Error::Inseparable);
                    continue;
                }
                assert_eq!(
                    mobius_via_discriminant(&p).unwrap(),
                    mobius(&p).unwrap(),
                    "{p}"
                );
            }
        }
    }
}
