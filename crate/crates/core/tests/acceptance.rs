//! Acceptance criteria. Each criterion prints one PASS/FAIL line; the test
//! fails if any criterion fails. Run with `--nocapture` to see the report.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use overpart::enumerate::overpartition_counts_by_series;
use overpart::homs::coset_representative;
use overpart::sample::{SampleParams, Sampler};
use overpart::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(message())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    check(elapsed <= limit, || {
        format!("took {elapsed:.2?}, limit {limit:?}")
    })
}

/// 1. Pentagonal-sum formula equals brute-force disjoint-pair count, 0 <= n <= 20.
fn corteel_identity() -> Outcome {
    let start = Instant::now();
    for n in 0..=20 {
        let formula = count_size_kernel_pairs_formula(n);
        let brute = BigInt::from(count_size_kernel_pairs_bruteforce(n));
        check(formula == brute, || format!("n = {n}: formula {formula}, brute force {brute}"))?;
    }
    check(count_size_kernel_pairs_bruteforce(1) == 0, || "n = 1 spot value".into())?;
    check(count_size_kernel_pairs_bruteforce(2) == 2, || "n = 2 spot value".into())?;
    within(start.elapsed(), Duration::from_secs(10))?;
    Ok(format!("21 values exact in {:.2?}", start.elapsed()))
}

/// 2. Supernorm round trip on 1,000 samples and multiplicativity on 1,000 pairs.
fn supernorm_isomorphism() -> Outcome {
    let start = Instant::now();
    let mut sampler = Sampler::new(0x5eed_0002, SampleParams::default());
    for _ in 0..1000 {
        let a = sampler.overpartition();
        let q = supernorm_over(&a).map_err(|e| e.to_string())?;
        let back = factor_to_overpartition(&q).map_err(|e| e.to_string())?;
        check(back == a, || format!("{a} -> {q} -> {back}"))?;
    }
    for _ in 0..1000 {
        let (a, b) = (sampler.overpartition(), sampler.overpartition());
        let lhs = supernorm_over(&(&a * &b)).map_err(|e| e.to_string())?;
        let rhs = &supernorm_over(&a).map_err(|e| e.to_string())?
            * &supernorm_over(&b).map_err(|e| e.to_string())?;
        check(lhs == rhs, || format!("N({a} * {b}) = {lhs} but product is {rhs}"))?;
    }
    within(start.elapsed(), Duration::from_secs(5))?;
    Ok(format!("1000 round trips, 1000 products in {:.2?}", start.elapsed()))
}

/// 3. Depth-3, max-part-3 lattice has exactly the 20 expected supernorm labels.
fn lattice_reproduction() -> Outcome {
    let lattice = lattice_levels(3, 3).map_err(|e| e.to_string())?;
    let levels: [&[u64]; 4] = [
        &[1],
        &[2, 3, 5],
        &[4, 6, 9, 10, 15, 25],
        &[8, 12, 20, 18, 27, 45, 30, 50, 75, 125],
    ];
    check(lattice.nodes.len() == 20, || format!("{} nodes", lattice.nodes.len()))?;
    for (k, expected) in levels.iter().enumerate() {
        let got: BTreeSet<BigNat> = lattice.level(k).map(|n| n.supernorm.clone()).collect();
        let want: BTreeSet<BigNat> = expected.iter().map(|&v| BigNat::from(v)).collect();
        check(got == want, || format!("level {k}: {got:?} != {want:?}"))?;
        check(lattice.level(k).count() == expected.len(), || format!("level {k} size"))?;
    }
    for node in &lattice.nodes {
        let direct = supernorm(&node.partition).map_err(|e| e.to_string())?;
        check(direct == node.supernorm, || format!("label of {}", node.partition))?;
    }
    for &(lower, upper) in &lattice.edges {
        let (u, v) = (&lattice.nodes[lower], &lattice.nodes[upper]);
        check(u.supernorm.divides(&v.supernorm), || {
            format!("{} does not divide {}", u.supernorm, v.supernorm)
        })?;
        check(u.partition.is_contained_in(&v.partition), || {
            format!("{} not contained in {}", u.partition, v.partition)
        })?;
    }
    Ok(format!("20 nodes, {} edges, all divisibility edges", lattice.edges.len()))
}

/// 4. Group axioms on 10,000 sampled triples.
fn group_axioms() -> Outcome {
    let mut sampler = Sampler::new(0x5eed_0004, SampleParams::default());
    let empty = Overpartition::empty();
    for i in 0..10_000 {
        let (a, b, c) = (sampler.overpartition(), sampler.overpartition(), sampler.overpartition());
        check(&(&a * &b) * &c == &a * &(&b * &c), || format!("associativity #{i}"))?;
        check(&a * &b == &b * &a, || format!("commutativity #{i}"))?;
        check(&a * &empty == a && &empty * &a == a, || format!("identity #{i}"))?;
        check((&a * &a.inverse()).is_empty(), || format!("inverse #{i}"))?;
        check((&a.inverse() * &a).is_empty(), || format!("left inverse #{i}"))?;
    }
    Ok("10000 triples, 0 failures".into())
}

/// 5. Homomorphism laws and rational-form identities on 1,000 pairs per statistic.
fn homomorphisms() -> Outcome {
    let mut sampler = Sampler::new(0x5eed_0005, SampleParams::default());
    let s: BTreeSet<Part> = [1, 3].into_iter().collect();
    let m = 5;
    let pair = |sampler: &mut Sampler| (sampler.overpartition(), sampler.overpartition());

    let rational_identities = |a: &Overpartition| -> Result<(), String> {
        let (num, den) = to_rational_form(a).into_parts();
        check(oversize(a) == num.size() as i128 - den.size() as i128, || {
            format!("oversize of {a} vs rational form")
        })?;
        check(overlength(a) == num.length() as i128 - den.length() as i128, || {
            format!("overlength of {a} vs rational form")
        })
    };

    for _ in 0..1000 {
        let (a, b) = pair(&mut sampler);
        check(oversize(&(&a * &b)) == oversize(&a) + oversize(&b), || format!("oversize {a} {b}"))?;
        rational_identities(&a)?;
        rational_identities(&b)?;
    }
    for _ in 0..1000 {
        let (a, b) = pair(&mut sampler);
        check(overlength(&(&a * &b)) == overlength(&a) + overlength(&b), || {
            format!("overlength {a} {b}")
        })?;
        rational_identities(&a)?;
    }
    for _ in 0..1000 {
        let (a, b) = pair(&mut sampler);
        check(overnorm(&(&a * &b)) == &overnorm(&a) * &overnorm(&b), || format!("overnorm {a} {b}"))?;
    }
    for _ in 0..1000 {
        let (a, b) = pair(&mut sampler);
        let k = sampler.part();
        check(
            multiplicity_of(k, &(&a * &b)) == multiplicity_of(k, &a) + multiplicity_of(k, &b),
            || format!("multiplicity of {k} in {a} {b}"),
        )?;
    }
    for _ in 0..1000 {
        let (a, b) = pair(&mut sampler);
        check(
            delete_parts_in(&s, &(&a * &b)) == &delete_parts_in(&s, &a) * &delete_parts_in(&s, &b),
            || format!("delete_parts_in {a} {b}"),
        )?;
    }
    for _ in 0..1000 {
        let (a, b) = pair(&mut sampler);
        check(
            overlength_mod(m, &(&a * &b)) == (overlength_mod(m, &a) + overlength_mod(m, &b)) % m,
            || format!("overlength mod {m} {a} {b}"),
        )?;
    }
    Ok("6 statistics x 1000 pairs, rational-form identities on 3000 samples".into())
}

/// 6. same_coset agrees with equality of quotient images, 1,000 pairs per family.
fn first_isomorphism() -> Outcome {
    let mut sampler = Sampler::new(0x5eed_0006, SampleParams::default());
    let families = [
        SubgroupSpec::SizeKernel,
        SubgroupSpec::LengthKernel,
        SubgroupSpec::parts_in([1, 3]).unwrap(),
        SubgroupSpec::parts_avoiding([1, 3]).unwrap(),
        SubgroupSpec::length_mod(5).unwrap(),
    ];
    let mut report = Vec::new();
    for g in &families {
        let mut shared = 0;
        for i in 0..1000 {
            let a = sampler.overpartition();
            // Half the pairs are forced into one coset so both directions are exercised.
            let b = if i % 2 == 0 {
                sampler.overpartition()
            } else {
                let h = sampler.overpartition();
                let rep = coset_representative(&quotient_image(&h, g), g).map_err(|e| e.to_string())?;
                &a * &(&h * &rep.inverse())
            };
            let same = same_coset(&a, &b, g);
            let images_equal = quotient_image(&a, g) == quotient_image(&b, g);
            check(same == images_equal, || format!("{} on {a}, {b}", g.kind()))?;
            shared += usize::from(same);
        }
        check(shared >= 500, || format!("{}: only {shared} shared cosets", g.kind()))?;
        report.push(format!("{} {shared}/1000", g.kind()));
    }
    Ok(format!("shared cosets: {}", report.join(", ")))
}

/// 7. Counting oracles: p(n), overpartition counts and 2^d overlinings.
fn counting_oracles() -> Outcome {
    let start = Instant::now();
    for n in 0..=30u32 {
        let enumerated = partitions_of(n).count();
        let p = partition_count(n as i64);
        check(p == BigUint::from(enumerated), || format!("p({n}) = {p}, enumerated {enumerated}"))?;
    }
    let series = overpartition_counts_by_series(12);
    for n in 0..=12u32 {
        let streamed = overpartitions_of(n).count();
        check(series[n as usize] == BigUint::from(streamed), || {
            format!("n = {n}: series {}, stream {streamed}", series[n as usize])
        })?;
        for base in partitions_of(n) {
            let expected = 1usize << base.distinct_parts();
            let got: BTreeSet<Overpartition> = overlinings_of(&base).collect();
            check(got.len() == expected, || format!("{base}: {} overlinings", got.len()))?;
        }
    }
    let base = Partition::from_parts([3, 2, 2, 2, 1, 1]).unwrap();
    check(overlinings_of(&base).count() == 8, || "(3,2,2,2,1,1) overlinings".into())?;
    within(start.elapsed(), Duration::from_secs(30))?;
    Ok(format!("all counts exact in {:.2?}", start.elapsed()))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 7] = [
        ("1 corteel identity n<=20", corteel_identity),
        ("2 supernorm isomorphism", supernorm_isomorphism),
        ("3 inclusion lattice depth 3", lattice_reproduction),
        ("4 group axioms", group_axioms),
        ("5 homomorphism laws", homomorphisms),
        ("6 first isomorphism consistency", first_isomorphism),
        ("7 counting oracles", counting_oracles),
    ];
    let mut failures = 0;
    for (name, criterion) in criteria {
        match criterion() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(reason) => {
                failures += 1;
                println!("FAIL  {name}: {reason}");
            }
        }
    }
    assert_eq!(failures, 0, "{failures} acceptance criteria failed");
}
