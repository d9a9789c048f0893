use regprod::arith::{gcd, Factorization};
use regprod::hurwitz::HurwitzEvaluator;
use regprod::lfunc::LFunctions;
use regprod::progressions::{regprod_progression, ProgressionTarget};
use std::f64::consts::PI;

fn main() {
    let mut l = LFunctions::new(HurwitzEvaluator::default());
    for m in [7u64, 9, 15, 16, 24, 30] {
        let mut exponent = 0.0;
        let mut ok = true;
        for a in 1..m {
            if gcd(a, m) == 1 {
                match regprod_progression(&mut l, &ProgressionTarget::new(m, a).unwrap()) {
                    Ok(p) => exponent += p.exponent,
                    Err(e) => {
                        println!("m={m} a={a}: ERROR {e}");
                        ok = false;
                        break;
                    }
                }
            }
        }
        if !ok {
            continue;
        }
        let prime_prod: f64 = Factorization::of(m)
            .unwrap()
            .primes()
            .iter()
            .map(|&p| p as f64)
            .product();
        let expect = 4.0 * PI * PI / prime_prod;
        let rel = (exponent.exp() - expect).abs() / expect;
        println!(
            "m={m}: partition rel err {rel:.3e} (value {:.9}, expect {expect:.9})",
            exponent.exp()
        );
    }
}
