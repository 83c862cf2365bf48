//! Acceptance criteria, one line of output per criterion.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, ExitCode, Stdio};
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trisect_core::diagram::{
    cp2_sum_cp2bar, stabilize, standard_diagram, Family, Move, StandardManifold,
};
use trisect_core::group::{
    abelianize_presentation, build_cube, count_homs, pi1_presentation, tietze_simplify,
    verify_cube, CheckStatus, Letter, Presentation, SymmetricGroup, DEFAULT_HOM_CAP,
};
use trisect_core::invariants::{
    euler_characteristic, form_invariants, homology_of_x, intersection_form, k_triple,
    poincare_candidate_check, FormInvariants, Homology, Parity, PoincareVerdict,
    DEFAULT_POINCARE_BUDGET,
};
use trisect_core::io::{parse, serialize, ParsedDiagram};
use trisect_core::linalg::{smith_normal_form, QuotientInvariants};
use trisect_core::word::{GeneratorKind, GeneratorToken};
use trisect_core::{IntMatrix, TrisectionDiagram, Word};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);
/// A moved diagram with its stabilization count and expected k-triple.
type Variant = (TrisectionDiagram, usize, [usize; 3]);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<String, String> {
    let t = start.elapsed();
    check(t < limit, || format!("took {t:.2?}, limit {limit:?}"))?;
    Ok(format!("{t:.2?}"))
}

fn library() -> Vec<(&'static str, TrisectionDiagram)> {
    let mut v: Vec<_> = StandardManifold::ALL
        .iter()
        .map(|m| (m.name(), standard_diagram(*m)))
        .collect();
    v.push(("CP2#CP2BAR", cp2_sum_cp2bar()));
    v
}

fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures")
}

fn fixture_files() -> Vec<PathBuf> {
    let mut v: Vec<_> = std::fs::read_dir(fixture_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "tri"))
        .collect();
    v.sort();
    v
}

fn random_word(rng: &mut ChaCha8Rng, genus: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::new(
        (0..len)
            .map(|_| GeneratorToken {
                kind: if rng.gen_bool(0.5) {
                    GeneratorKind::A
                } else {
                    GeneratorKind::B
                },
                index: rng.gen_range(1..=genus as u32),
                inverted: rng.gen_bool(0.5),
            })
            .collect(),
    )
}

fn random_move(rng: &mut ChaCha8Rng, d: &TrisectionDiagram) -> Move {
    let family = Family::ALL[rng.gen_range(0..3)];
    let g = d.genus();
    if g < 2 || rng.gen_bool(0.3) {
        return Move::Stabilize(family);
    }
    let curve = rng.gen_range(0..g);
    let over = (curve + rng.gen_range(1..g)) % g;
    Move::Slide {
        family,
        curve,
        over,
        conjugator: random_word(rng, g, 2),
        sign: if rng.gen_bool(0.5) { 1 } else { -1 },
    }
}

fn qi(free_rank: usize, torsion: &[i64]) -> QuotientInvariants {
    QuotientInvariants {
        free_rank,
        torsion: torsion.iter().map(|&t| BigInt::from(t)).collect(),
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let sphere = [qi(1, &[]), qi(0, &[]), qi(0, &[]), qi(0, &[]), qi(1, &[])];
    let b2 = |r| [qi(1, &[]), qi(0, &[]), qi(r, &[]), qi(0, &[]), qi(1, &[])];
    let fi = |rank, signature, parity| FormInvariants {
        rank,
        signature,
        parity,
    };
    let expected: Vec<(&str, i64, [QuotientInvariants; 5], FormInvariants)> = vec![
        ("S4", 2, sphere.clone(), fi(0, 0, Parity::Even)),
        ("CP2", 3, b2(1), fi(1, 1, Parity::Odd)),
        ("CP2BAR", 3, b2(1), fi(1, -1, Parity::Odd)),
        (
            "S1xS3",
            0,
            [qi(1, &[]), qi(1, &[]), qi(0, &[]), qi(1, &[]), qi(1, &[])],
            fi(0, 0, Parity::Even),
        ),
        ("CP2#CP2BAR", 4, b2(2), fi(2, 0, Parity::Odd)),
        ("S2xS2", 4, b2(2), fi(2, 0, Parity::Even)),
    ];
    let lib = library();
    for (name, chi, groups, form) in expected {
        let d = &lib.iter().find(|(n, _)| *n == name).unwrap().1;
        let got_chi = euler_characteristic(d).map_err(|e| format!("{name}: {e}"))?;
        check(got_chi == chi, || format!("{name}: chi {got_chi} != {chi}"))?;
        let h = homology_of_x(d).map_err(|e| format!("{name}: {e}"))?;
        check(h.groups == groups, || {
            format!("{name}: homology {:?}", h.groups)
        })?;
        let q = intersection_form(d).map_err(|e| format!("{name}: {e}"))?;
        let f = form_invariants(&q).map_err(|e| format!("{name}: {e}"))?;
        check(f == form, || format!("{name}: form {f:?}"))?;
    }
    let cp2 = intersection_form(&standard_diagram(StandardManifold::CP2)).unwrap();
    check(cp2 == IntMatrix::from_i64(1, &[&[1]]), || {
        format!("CP2 form {cp2}")
    })?;
    let cp2bar = intersection_form(&standard_diagram(StandardManifold::CP2Bar)).unwrap();
    check(cp2bar == IntMatrix::from_i64(1, &[&[-1]]), || {
        format!("CP2BAR form {cp2bar}")
    })?;
    within(start, Duration::from_secs(1))
}

#[derive(PartialEq, Debug)]
struct Snapshot(i64, Homology, FormInvariants, BigUint);

fn snapshot(d: &TrisectionDiagram, s3: &SymmetricGroup) -> Result<Snapshot, String> {
    let chi = euler_characteristic(d).map_err(|e| e.to_string())?;
    let h = homology_of_x(d).map_err(|e| e.to_string())?;
    let f = form_invariants(&intersection_form(d).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let p = tietze_simplify(&pi1_presentation(d), 10_000);
    let n = count_homs(&p, s3, DEFAULT_HOM_CAP).map_err(|e| e.to_string())?;
    Ok(Snapshot(chi, h, f, n))
}

/// `k` after stabilizing `f`: the one pair not involving `f` gains a parallel curve.
fn bump(k: &mut [usize; 3], f: Family) {
    match f {
        Family::Alpha => k[1] += 1,
        Family::Beta => k[2] += 1,
        Family::Gamma => k[0] += 1,
    }
}

fn random_sequences(seed: u64) -> Vec<(&'static str, TrisectionDiagram, Vec<Variant>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    library()
        .into_iter()
        .map(|(name, base)| {
            let k0 = k_triple(&base).unwrap();
            let runs = (0..100)
                .map(|_| {
                    let (mut d, mut stabs, mut k) = (base.clone(), 0, k0);
                    for _ in 0..rng.gen_range(1..=10) {
                        let m = random_move(&mut rng, &d);
                        if let Move::Stabilize(f) = m {
                            stabs += 1;
                            bump(&mut k, f);
                        }
                        d = m.apply(&d).unwrap();
                    }
                    (d, stabs, k)
                })
                .collect();
            (name, base, runs)
        })
        .collect()
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let s3 = SymmetricGroup::new(3).unwrap();
    let mut count = 0;
    for (name, base, runs) in random_sequences(0x5eed) {
        let before = snapshot(&base, &s3)?;
        for (d, stabs, _) in runs {
            check(d.genus() == base.genus() + stabs, || {
                format!("{name}: genus {} after {stabs} stabilizations", d.genus())
            })?;
            let after = snapshot(&d, &s3)?;
            check(after == before, || {
                format!("{name}: {after:?} != {before:?}")
            })?;
            count += 1;
        }
    }
    Ok(format!(
        "{count} sequences, {}",
        within(start, Duration::from_secs(30))?
    ))
}

fn criterion_3() -> Outcome {
    let expected: [(&str, [usize; 3]); 6] = [
        ("S4", [0, 0, 0]),
        ("CP2", [0, 0, 0]),
        ("CP2BAR", [0, 0, 0]),
        ("S1xS3", [1, 1, 1]),
        ("S2xS2", [0, 0, 0]),
        ("CP2#CP2BAR", [0, 0, 0]),
    ];
    let mut checked = 0;
    for (name, base, runs) in random_sequences(0xb0b) {
        let k0 = expected.iter().find(|(n, _)| *n == name).unwrap().1;
        let got = k_triple(&base).map_err(|e| format!("{name}: {e}"))?;
        check(got == k0, || format!("{name}: k {got:?} != {k0:?}"))?;
        for (d, _, k) in runs {
            let got = k_triple(&d).map_err(|e| format!("{name} variant: {e}"))?;
            check(got == k, || format!("{name} variant: k {got:?} != {k:?}"))?;
            checked += 1;
        }
    }
    Ok(format!(
        "{} base diagrams, {checked} variants",
        expected.len()
    ))
}

fn det(m: &[Vec<BigInt>]) -> BigInt {
    if m.is_empty() {
        return BigInt::from(1);
    }
    let mut total = BigInt::from(0);
    for (j, x) in m[0].iter().enumerate() {
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = x * det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// Invariant factors from gcds of k×k minors.
fn minor_divisors(m: &[Vec<BigInt>], rows: usize, cols: usize) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut prev = BigInt::from(1);
    for k in 1..=rows.min(cols) {
        let mut g = BigInt::from(0);
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<BigInt>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect())
                    .collect();
                g = g.gcd(&det(&sub));
            }
        }
        if g == BigInt::from(0) {
            break;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    for _ in 0..500 {
        let (r, c) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let rows: Vec<Vec<BigInt>> = (0..r)
            .map(|_| {
                (0..c)
                    .map(|_| BigInt::from(rng.gen_range(-4..=4)))
                    .collect()
            })
            .collect();
        let m = IntMatrix::from_rows(c, rows.clone()).unwrap();
        let got = smith_normal_form(&m).divisors();
        let want = minor_divisors(&rows, r, c);
        check(got == want, || format!("SNF of {m}: {got:?} != {want:?}"))?;
    }
    let mut variants = 0;
    let mut fixtures = 0;
    for path in fixture_files() {
        let ParsedDiagram::Trisection(base) =
            parse(&std::fs::read_to_string(&path).unwrap()).unwrap()
        else {
            continue;
        };
        fixtures += 1;
        let mut d = base;
        for _ in 0..100 / 8 + 1 {
            let h1 = homology_of_x(&d).map_err(|e| e.to_string())?.groups[1].clone();
            let ab = abelianize_presentation(&pi1_presentation(&d));
            check(ab == h1, || {
                format!("{}: ab(pi1) {ab} != H1 {h1}", path.display())
            })?;
            d = random_move(&mut rng, &d).apply(&d).unwrap();
            variants += 1;
        }
    }
    check(variants >= 100, || format!("only {variants} variants"))?;
    Ok(format!(
        "500 matrices, {fixtures} fixtures, {variants} diagrams"
    ))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    for (name, d) in library() {
        let report =
            verify_cube(&build_cube(&d).unwrap(), 10_000).map_err(|e| format!("{name}: {e}"))?;
        check(
            report.failed_faces() == 0 && report.failed_maps() == 0,
            || format!("{name}: {report:?}"),
        )?;
    }
    let mut c = build_cube(&standard_diagram(StandardManifold::CP2)).unwrap();
    // ⟨a1, b1 | a1², b1⟩ ≅ ℤ/2 in place of the α-β sector
    c.vertices[3] = Presentation::with_names(
        c.vertices[3].names().to_vec(),
        vec![vec![Letter::new(0), Letter::new(0)], vec![Letter::new(1)]],
    )
    .unwrap();
    let report = verify_cube(&c, 10_000).map_err(|e| e.to_string())?;
    let failed: Vec<_> = report
        .faces
        .iter()
        .filter(|f| f.status == CheckStatus::Failed)
        .collect();
    check(failed.len() == 1, || {
        format!("corrupted cube: {} failed faces", failed.len())
    })?;
    Ok(format!(
        "corrupted face {}, {}",
        failed[0].label(),
        within(start, Duration::from_secs(10))?
    ))
}

fn criterion_6() -> Outcome {
    let s3 = SymmetricGroup::new(3).unwrap();
    let s4 = SymmetricGroup::new(4).unwrap();
    let homs = |m, g: &SymmetricGroup| {
        count_homs(&pi1_presentation(&standard_diagram(m)), g, DEFAULT_HOM_CAP).unwrap()
    };
    let (a, b) = (
        homs(StandardManifold::S4, &s3),
        homs(StandardManifold::S1xS3, &s3),
    );
    check(a == BigUint::from(1u8) && b == BigUint::from(6u8), || {
        format!("S3 counts {a} and {b}")
    })?;

    let s4d = standard_diagram(StandardManifold::S4);
    let triple = stabilize(
        &stabilize(&stabilize(&s4d, Family::Alpha), Family::Beta),
        Family::Gamma,
    );
    for (label, d, want) in [
        ("S4", &s4d, PoincareVerdict::TrivializedPi1),
        (
            "S4 triple stabilization",
            &triple,
            PoincareVerdict::TrivializedPi1,
        ),
        (
            "CP2",
            &standard_diagram(StandardManifold::CP2),
            PoincareVerdict::NotHomotopySphere,
        ),
    ] {
        let got = poincare_candidate_check(d, DEFAULT_POINCARE_BUDGET).verdict;
        check(got == want, || format!("{label}: {got} != {want}"))?;
    }

    // raw presentations, no simplification
    let start = Instant::now();
    let mut n = 0;
    for (name, d) in library().into_iter().filter(|(_, d)| d.genus() <= 2) {
        let p = pi1_presentation(&d);
        let count = count_homs(&p, &s4, DEFAULT_HOM_CAP).map_err(|e| format!("{name}: {e}"))?;
        let ab = abelianize_presentation(&p);
        let want = if ab.free_rank == 1 {
            BigUint::from(24u8)
        } else {
            BigUint::from(1u8)
        };
        check(count == want, || format!("{name}: {count} homs to S4"))?;
        n += 1;
    }
    Ok(format!(
        "S4 counts on {n} diagrams in {}",
        within(start, Duration::from_secs(10))?
    ))
}

fn run_cli(args: &[&str], stdin: Option<&str>) -> (i32, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_trisect"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn criterion_7() -> Outcome {
    let files = fixture_files();
    for p in &files {
        let text = std::fs::read_to_string(p).unwrap();
        let parsed = parse(&text).map_err(|e| format!("{}: {e}", p.display()))?;
        check(serialize(&parsed) == text, || {
            format!("{} does not round-trip", p.display())
        })?;
    }
    let fixture = |name: &str| fixture_dir().join(name).to_string_lossy().into_owned();
    let cp2 = fixture("cp2.tri");
    let s4 = fixture("s4_stabilized.tri");
    let imprimitive = fixture("invalid/imprimitive.tri");
    let lagrangian = fixture("invalid/not_lagrangian.tri");
    let torsion = fixture("invalid/torsion_pair.tri");
    let cases: Vec<(Vec<&str>, Option<&str>, i32)> = vec![
        (vec!["validate", &cp2], None, 0),
        (vec!["invariants", &cp2], None, 0),
        (vec!["standard", "S4"], None, 0),
        (vec!["stabilize", &cp2, "--family", "beta"], None, 0),
        (vec!["homcount", &s4, "--target", "s3"], None, 0),
        (vec!["cube", &cp2, "--verify", "10000"], None, 0),
        (vec!["poincare-check", &s4], None, 0),
        (vec!["validate", &imprimitive], None, 1),
        (vec!["validate", &lagrangian], None, 1),
        (vec!["invariants", &torsion], None, 1),
        (
            vec![
                "slide", &s4, "--family", "alpha", "--curve", "1", "--over", "1",
            ],
            None,
            1,
        ),
        (vec!["validate", "-"], Some("genus 1\n"), 2),
        (
            vec!["validate", "-"],
            Some("trisection\ngenus 1\nalpha a1 | a1\nbeta b1\ngamma b1\n"),
            2,
        ),
        (vec!["frobnicate"], None, 2),
        (vec!["stabilize", &cp2, "--family", "delta"], None, 2),
        (vec!["validate", "/nonexistent/file.tri"], None, 2),
        (
            vec![
                "homcount",
                &s4,
                "--target",
                "s5",
                "--cap",
                "10",
                "--simplify",
                "0",
            ],
            None,
            3,
        ),
    ];
    for (args, stdin, want) in &cases {
        let (code, _) = run_cli(args, *stdin);
        check(code == *want, || {
            format!(
                "`trisect {}` exited {code}, expected {want}",
                args.join(" ")
            )
        })?;
    }
    let (_, a) = run_cli(&["invariants", &cp2], None);
    let (_, b) = run_cli(
        &["invariants", "-"],
        Some(&std::fs::read_to_string(&cp2).unwrap()),
    );
    check(
        a == b && a.contains("euler_characteristic: 3") && a.contains("signature: 1"),
        || a.clone(),
    )?;
    Ok(format!(
        "{} fixtures, {} exit-code cases",
        files.len(),
        cases.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("known-manifold suite", criterion_1),
        ("move invariance", criterion_2),
        ("pairwise standard Heegaard pairs", criterion_3),
        ("oracle equivalence", criterion_4),
        ("cube suite", criterion_5),
        ("distinguishing power", criterion_6),
        ("format stability", criterion_7),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {}: PASS {name} ({detail})", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {e}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
