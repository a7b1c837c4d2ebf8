use std::path::Path;
use std::time::Instant;

use peskine_core::associations::{
    cubic_closed, cubic_oracle_detail, fixture_mismatches, k3_closed, k3_oracle_detail,
    parse_table_fixture, render_csv, render_text, table1, AssocKind, OracleResult,
};
use peskine_core::fixtures::{parse_poly_file, APPENDIX_CUBIC, APPENDIX_SIGMA, TABLE1};
use peskine_core::markings::{admissibility_failure, admissible, cross_validate, marking_gram};
use peskine_core::poly::gcd::normalize_primitive;
use peskine_core::poly::text::format_poly;
use peskine_core::poly::{MultiPoly, Rationals};
use peskine_core::trivector::{
    extract_cubic, parse_tvec, peskine_equations, rank_at_point, smoothness_check, verify_flag, Flag, SmoothVerdict,
    Trivector, DIM,
};

use crate::report::{Failure, RunReport};
use crate::{Format, Kind, PeskineAction};

type Outcome = Result<(), Failure>;

const DEFAULT_PRIMES: [u64; 2] = [10007, 31013];
const PRIMES_ENV: &str = "PESKINE_PRIMES";

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn require_admissible(d: i64) -> Outcome {
    match admissibility_failure(d) {
        Some(reason) => Err(Failure::Input(reason)),
        None => Ok(()),
    }
}

/// Command-line primes, else `PESKINE_PRIMES`, else the default pair.
fn resolve_primes(cli: Vec<u64>) -> Result<Vec<u64>, Failure> {
    if !cli.is_empty() {
        return Ok(cli);
    }
    match std::env::var(PRIMES_ENV) {
        Ok(v) if !v.trim().is_empty() => v
            .split(',')
            .map(|t| t.trim().parse::<u64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| Failure::Input(format!("{PRIMES_ENV} must be a comma-separated list of primes, got '{v}'"))),
        _ => Ok(DEFAULT_PRIMES.to_vec()),
    }
}

pub fn marking(r: &mut RunReport, d: i64) -> Outcome {
    r.set_command("marking").input("d", d);
    require_admissible(d)?;
    r.output("admissible", "yes");
    let m = marking_gram(d)?;
    let (a, b, c) = m.abc;
    r.output("(a,b,c)", format!("({a},{b},{c})"));
    let rows: Vec<String> = m
        .rows()
        .iter()
        .map(|row| format!("({},{},{})", row[0], row[1], row[2]))
        .collect();
    r.output("gram", rows.join(","));
    r.output("determinant", m.lattice.determinant());
    let check = cross_validate(d)?;
    r.output("closed form", &check.closed);
    let qs: Vec<String> = check.computed.qvals.iter().map(|q| q.to_string()).collect();
    // an odd lattice only determines q mod Z
    let modulus = if check.computed.even { "2Z" } else { "Z" };
    r.output(
        "computed",
        format!("{}, q on generators = [{}] mod {modulus}", check.computed, qs.join(", ")),
    );
    r.check("determinant equals d")
        .check("closed-form discriminant group and form against Smith normal form");
    if !check.passed() {
        return Err(Failure::Mismatch(format!(
            "closed form and lattice computation disagree (det {}, group {}, form {})",
            yes_no(check.det_ok),
            yes_no(check.group_ok),
            yes_no(check.form_ok)
        )));
    }
    Ok(())
}

fn describe(o: &OracleResult) -> String {
    match o.witness {
        Some(k) => format!("yes (k = {k}: {})", o.congruence),
        None => format!("no ({})", o.congruence),
    }
}

pub fn assoc(r: &mut RunReport, d: i64, kind: Kind) -> Outcome {
    r.set_command("assoc").input("d", d);
    require_admissible(d)?;
    let kinds: &[AssocKind] = match kind {
        Kind::K3 => &[AssocKind::K3],
        Kind::Cubic => &[AssocKind::Cubic],
        Kind::Both => &[AssocKind::K3, AssocKind::Cubic],
    };
    let mut mismatch = Vec::new();
    for &k in kinds {
        let (closed, oracle) = match k {
            AssocKind::K3 => (k3_closed(d)?, k3_oracle_detail(d)?),
            AssocKind::Cubic => (cubic_closed(d)?, cubic_oracle_detail(d)?),
        };
        let name = k.name();
        r.output(name, yes_no(closed));
        r.output(&format!("{name} closed form"), yes_no(closed));
        r.output(&format!("{name} oracle"), describe(&oracle));
        r.check(&format!("{name}: prime condition against exhaustive congruence scan"));
        if closed != oracle.holds {
            mismatch.push(format!("{name}: closed {}, oracle {}", yes_no(closed), yes_no(oracle.holds)));
        }
    }
    if mismatch.is_empty() {
        Ok(())
    } else {
        Err(Failure::Mismatch(format!("closed form and oracle disagree at d = {d}: {}", mismatch.join("; "))))
    }
}

fn parse_range(s: &str) -> Result<Vec<i64>, Failure> {
    let bad = || Failure::Input(format!("bad range '{s}', expected e.g. 22..100"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    Ok((lo..=hi).filter(|&d| admissible(d)).collect())
}

pub fn table(r: &mut RunReport, range: Option<&str>, list: Option<Vec<i64>>, fixture_check: bool, format: Format) -> Outcome {
    r.set_command("table");
    let fixture = parse_table_fixture(TABLE1)?;
    let ds = match (range, list) {
        (Some(s), _) => parse_range(s)?,
        (None, Some(l)) => {
            for &d in &l {
                require_admissible(d)?;
            }
            l
        }
        (None, None) => fixture.iter().map(|f| f.d).collect(),
    };
    let rows = table1(&ds, &fixture)?;
    r.body = Some(match format {
        Format::Csv => render_csv(&rows),
        Format::Text => render_text(&rows),
    });
    if fixture_check {
        let bad = fixture_mismatches(&rows, &fixture);
        let compared = rows.iter().filter(|row| fixture.iter().any(|f| f.d == row.d)).count();
        for (f, got) in &bad {
            eprintln!(
                "fixture mismatch at d = {}: printed k3 {} cubic {}, computed k3 {} cubic {}",
                f.d,
                yes_no(f.assoc_k3),
                yes_no(f.assoc_cubic),
                yes_no(got.assoc_k3),
                yes_no(got.assoc_cubic)
            );
        }
        if !bad.is_empty() {
            return Err(Failure::Mismatch(format!("{} of {compared} reference rows differ", bad.len())));
        }
        eprintln!("fixture check: {compared} reference rows match");
    }
    Ok(())
}

fn load_sigma(path: &Path) -> Result<Trivector<Rationals>, Failure> {
    Ok(parse_tvec(&read(path)?)?)
}

fn parse_flag(s: &str) -> Result<Flag, Failure> {
    if s.starts_with('e') && s.contains(':') {
        return Ok(Flag::parse_shorthand(s)?);
    }
    Ok(Flag::parse_file(&read(Path::new(s))?)?)
}

fn parse_point(s: &str) -> Result<Vec<i64>, Failure> {
    let bad = || Failure::Input(format!("bad point '{s}', expected e.g. e1 or ten comma-separated integers"));
    if let Some(n) = s.strip_prefix('e') {
        let i: usize = n.parse().map_err(|_| bad())?;
        if !(1..=DIM).contains(&i) {
            return Err(bad());
        }
        return Ok((0..DIM).map(|j| i64::from(j + 1 == i)).collect());
    }
    let v: Vec<i64> = s
        .split(',')
        .map(|t| t.trim().parse())
        .collect::<Result<_, _>>()
        .map_err(|_| bad())?;
    if v.len() != DIM {
        return Err(bad());
    }
    Ok(v)
}

fn smooth_at(r: &mut RunReport, cubic: &MultiPoly<Rationals>, primes: &[u64]) -> Outcome {
    let mut verdicts = Vec::new();
    for &p in primes {
        let t = Instant::now();
        let v = smoothness_check(cubic, p)?;
        eprintln!("smoothness at p = {p}: {:.2?}", t.elapsed());
        r.output(&format!("smoothness mod {p}"), &v);
        if v == SmoothVerdict::BadPrime {
            return Err(Failure::Input(format!("p = {p} is a bad prime for this cubic")));
        }
        verdicts.push(v);
    }
    let combined: Vec<String> = verdicts.iter().map(|v| v.to_string()).collect();
    r.output("verdict", combined.join("/"));
    r.check("Jacobian criterion via reduced Groebner basis of the partials")
        .check("Euler relation: cubic reduces to 0 modulo its partials");
    if verdicts.iter().all(|v| *v == SmoothVerdict::Smooth) {
        Ok(())
    } else {
        Err(Failure::Mismatch("cubic is not certified smooth".into()))
    }
}

pub fn peskine(r: &mut RunReport, sigma_path: &Path, action: PeskineAction) -> Outcome {
    r.input("sigma", sigma_path.display());
    let sigma = load_sigma(sigma_path)?;
    match action {
        PeskineAction::Equations => {
            r.set_command("peskine equations");
            let sys = peskine_equations(&sigma);
            for ((a, b), q) in sys.pairs.iter().zip(&sys.quartics) {
                r.output(&format!("pf without {},{}", a + 1, b + 1), format_poly(q, "x"));
            }
        }
        PeskineAction::Rank { at } => {
            r.set_command("peskine rank").input("at", &at);
            let v = parse_point(&at)?;
            let q = Rationals;
            let v: Vec<_> = v.iter().map(|&x| peskine_core::poly::Field::from_i64(&q, x)).collect();
            r.output("rank", rank_at_point(&sigma, &v)?);
        }
        PeskineAction::FlagVerify { flag } => {
            r.set_command("peskine flag-verify").input("flag", &flag);
            let ok = verify_flag(&sigma, &parse_flag(&flag)?)?;
            r.output("flag condition", yes_no(ok));
            if !ok {
                return Err(Failure::Mismatch("flag condition fails".into()));
            }
        }
        PeskineAction::Cubic { flag } => {
            r.set_command("peskine cubic").input("flag", &flag);
            let t = Instant::now();
            let f = extract_cubic(&sigma, &parse_flag(&flag)?)?;
            eprintln!("cubic extraction: {:.2?}", t.elapsed());
            r.output("cubic", format_poly(&normalize_primitive(&f), "v"));
            r.check("every nonzero restricted quartic is the cubic times a linear form");
        }
        PeskineAction::Smooth { flag, primes } => {
            r.set_command("peskine smooth").input("flag", &flag);
            let primes = resolve_primes(primes)?;
            let f = normalize_primitive(&extract_cubic(&sigma, &parse_flag(&flag)?)?);
            smooth_at(r, &f, &primes)?;
        }
    }
    Ok(())
}

fn stage<T>(r: &mut RunReport, name: &str, body: impl FnOnce() -> Result<T, Failure>) -> Result<T, Failure> {
    let t = Instant::now();
    let out = body();
    eprintln!("stage {name}: {:.2?}", t.elapsed());
    r.output(&format!("stage {name}"), if out.is_ok() { "PASS" } else { "FAIL" });
    out
}

pub fn verify_appendix(r: &mut RunReport, primes: Vec<u64>, sigma: Option<&Path>, cubic: Option<&Path>) -> Outcome {
    r.set_command("verify-appendix");
    let primes = resolve_primes(primes)?;
    let ps: Vec<String> = primes.iter().map(|p| p.to_string()).collect();
    r.input("sigma", sigma.map_or("embedded".into(), |p| p.display().to_string()))
        .input("cubic", cubic.map_or("embedded".into(), |p| p.display().to_string()))
        .input("primes", ps.join(","));
    let sigma_text = match sigma {
        Some(p) => read(p)?,
        None => APPENDIX_SIGMA.to_string(),
    };
    let cubic_text = match cubic {
        Some(p) => read(p)?,
        None => APPENDIX_CUBIC.to_string(),
    };
    let sigma = parse_tvec(&sigma_text)?;
    let expected = normalize_primitive(&parse_poly_file(&cubic_text, 6)?);
    let flag = Flag::standard();
    stage(r, "flag-verify", || {
        if verify_flag(&sigma, &flag)? {
            Ok(())
        } else {
            Err(Failure::Mismatch("flag condition fails".into()))
        }
    })?;
    stage(r, "rank", || {
        let rank = rank_at_point(&sigma, &flag.w1_in(&Rationals))?;
        if rank == 4 {
            Ok(())
        } else {
            Err(Failure::Mismatch(format!("rank at W1 is {rank}, expected 4")))
        }
    })?;
    let f = stage(r, "cubic", || {
        let f = normalize_primitive(&extract_cubic(&sigma, &flag)?);
        if f == expected {
            Ok(f)
        } else {
            Err(Failure::Mismatch("extracted cubic is not proportional to the reference cubic".into()))
        }
    })?;
    let t = Instant::now();
    let smooth = smooth_at(r, &f, &primes);
    eprintln!("stage smooth: {:.2?}", t.elapsed());
    r.output("stage smooth", if smooth.is_ok() { "PASS" } else { "FAIL" });
    smooth?;
    r.output("result", "PASS");
    Ok(())
}
