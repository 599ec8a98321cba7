// Temporary profiling probe; deleted before release.
use std::time::Instant;

use centress_core::constructions::twisted::TwistedRing;
use centress_core::valuation::sample::Sampler;
use centress_core::valuation::{central_witness, invert, solve_mul, value};
use centress_core::finalg::Side;

#[test]
#[ignore]
fn probe_ratfunc() {
    let ring = TwistedRing::new(5, 2).unwrap();
    let mut s = Sampler::new(ring.field(), 42);
    let rs: Vec<_> = (0..40).map(|_| s.ratfunc()).collect();

    let t0 = Instant::now();
    let mut products = Vec::new();
    for a in &rs {
        for b in &rs {
            products.push(a.mul(b).unwrap());
        }
    }
    println!("1600 ratfunc muls (deg<=3 inputs): {:?}", t0.elapsed());

    let t0 = Instant::now();
    for a in rs.iter().take(10) {
        for b in products.iter().take(160) {
            let _ = a.mul(b).unwrap();
        }
    }
    println!("1600 ratfunc muls (deg<=6 rhs): {:?}", t0.elapsed());

    let t0 = Instant::now();
    for chunk in products.chunks(2).take(800) {
        if chunk.len() == 2 {
            let _ = chunk[0].add(&chunk[1]).unwrap();
        }
    }
    println!("800 ratfunc adds (deg<=6): {:?}", t0.elapsed());

    let t0 = Instant::now();
    for a in &rs {
        let _ = centress_core::exactalg::Derivation::X.apply(a).unwrap();
    }
    println!("40 derivations (deg<=3): {:?}", t0.elapsed());

    let t0 = Instant::now();
    for a in products.iter().take(40) {
        let _ = centress_core::exactalg::Derivation::X.apply(a).unwrap();
    }
    println!("40 derivations (deg<=6): {:?}", t0.elapsed());

    let t0 = Instant::now();
    for chunk in products.chunks(2).take(400) {
        if chunk.len() == 2 {
            let _ = chunk[0].numerator().gcd(chunk[1].numerator()).unwrap();
        }
    }
    println!("400 raw poly gcds (deg<=6): {:?}", t0.elapsed());

    // Breakdown of one add: the two gcd calls it makes.
    let a = &products[0];
    let b = &products[1];
    let t0 = Instant::now();
    for _ in 0..100 {
        let _ = a.denominator().gcd(b.denominator()).unwrap();
    }
    println!("100 den-gcds: {:?}", t0.elapsed());
    let num = a
        .numerator()
        .mul(b.denominator())
        .unwrap()
        .add(&b.numerator().mul(a.denominator()).unwrap())
        .unwrap();
    let den = a.denominator().mul(b.denominator()).unwrap();
    println!(
        "final-gcd input degrees: num {} ({} terms), den {} ({} terms)",
        num.total_degree(),
        num.term_count(),
        den.total_degree(),
        den.term_count()
    );
    let t0 = Instant::now();
    for _ in 0..100 {
        let _ = num.gcd(&den).unwrap();
    }
    println!("100 final-gcds: {:?}", t0.elapsed());
    let t0 = Instant::now();
    for _ in 0..100 {
        let _ = num.mul(&den).unwrap();
    }
    println!("100 big muls: {:?}", t0.elapsed());
    let t0 = Instant::now();
    for _ in 0..100 {
        let _ = centress_core::exactalg::RatFunc::new(num.clone(), den.clone()).unwrap();
    }
    println!("100 RatFunc::new: {:?}", t0.elapsed());
}

#[test]
#[ignore]
fn probe() {
    let ring = TwistedRing::new(5, 2).unwrap();
    let mut s = Sampler::new(ring.field(), 42);

    let t0 = Instant::now();
    let elems: Vec<_> = (0..10).map(|_| s.element(&ring)).collect();
    println!("sampling 10: {:?}", t0.elapsed());

    let t0 = Instant::now();
    for a in &elems {
        for b in &elems {
            let _ = ring.mul(a, b).unwrap();
        }
    }
    println!("100 twisted muls: {:?}", t0.elapsed());

    let t0 = Instant::now();
    for a in &elems {
        if value(&ring, a) == 0 {
            let _ = invert(&ring, a).unwrap();
        }
    }
    println!("inverts: {:?}", t0.elapsed());

    let t0 = Instant::now();
    for a in &elems {
        let _ = ring.to_matrix(a).unwrap();
    }
    println!("10 to_matrix: {:?}", t0.elapsed());

    let t0 = Instant::now();
    let ms: Vec<_> = elems.iter().map(|a| ring.to_matrix(a).unwrap()).collect();
    for a in &ms {
        for b in &ms {
            let _ = a.mul(b).unwrap();
        }
    }
    println!("100 matrix muls: {:?}", t0.elapsed());

    let t0 = Instant::now();
    for a in &elems {
        if !a.is_zero() {
            let _ = central_witness(&ring, a).unwrap();
        }
    }
    println!("central witnesses: {:?}", t0.elapsed());

    let t0 = Instant::now();
    let corner = ring.shift_element(1);
    for a in &elems {
        if !a.is_zero() {
            let _ = solve_mul(&ring, a, &corner, Side::Right).unwrap();
        }
    }
    println!("corner solves: {:?}", t0.elapsed());
}
