//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::Command;
use std::time::Instant;

use skewres_core::fractions::SkewFrac;
use skewres_core::poly::Poly;
use skewres_core::residues::{residue_sum, Point};
use skewres_core::skew_ring::SkewPoly;
use skewres_core::verify::{self, CheckOutcome};
use skewres_core::{Fe, FieldConfig, Tower};

const SEED: u64 = 20240601;

struct Criterion {
    id: usize,
    title: &'static str,
    outcomes: Vec<CheckOutcome>,
    notes: Vec<String>,
}

impl Criterion {
    fn new(id: usize, title: &'static str) -> Criterion {
        Criterion { id, title, outcomes: Vec::new(), notes: Vec::new() }
    }

    fn with(mut self, o: CheckOutcome, tag: &str) -> Criterion {
        let mut o = o;
        o.name = format!("{} [{tag}]", o.name);
        self.outcomes.push(o);
        self
    }

    fn expect(mut self, ok: bool, what: impl Into<String>) -> Criterion {
        let what = what.into();
        let mut o = CheckOutcome { name: what.clone(), trials: 1, failures: 0, skipped: 0, first_failure: None };
        if !ok {
            o.failures = 1;
            o.first_failure = Some(what);
        }
        self.outcomes.push(o);
        self
    }

    fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed())
    }

    fn report(&self) {
        let trials: usize = self.outcomes.iter().map(|o| o.trials).sum();
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        println!("{verdict} {:>2}  {} ({} checks, {trials} trials)", self.id, self.title, self.outcomes.len());
        for o in self.outcomes.iter().filter(|o| !o.passed()) {
            println!(
                "       {}: {}/{} failed; {}",
                o.name,
                o.failures,
                o.trials,
                o.first_failure.as_deref().unwrap_or("no applicable trials")
            );
        }
        for n in &self.notes {
            println!("       {n}");
        }
    }
}

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_skewres")
}

fn cli(args: &[&str]) -> (String, i32) {
    let out = Command::new(bin()).args(args).output().expect("binary runs");
    (String::from_utf8_lossy(&out.stdout).trim_end().to_string(), out.status.code().unwrap_or(-1))
}

fn main() {
    let start = Instant::now();
    let k25 = Tower::new(FieldConfig::gf25()).unwrap();
    let k343 = Tower::new(FieldConfig::gf343()).unwrap();
    let k4 = Tower::new(FieldConfig::gf4()).unwrap();
    let desk = [(&k25, "GF(25)"), (&k343, "GF(343)")];

    let mut criteria = Vec::new();

    let mut c = Criterion::new(1, "Euclidean division: exact reassembly, small remainders, unique quotients");
    for (k, tag) in desk {
        c = c.with(verify::euclidean_division(k, SEED, 500), tag);
    }
    criteria.push(c);

    let mut c = Criterion::new(2, "Ideals: Bezout identities and lcm divisibility for all four kinds");
    for (k, tag) in desk {
        c = c.with(verify::ideals(k, SEED, 200), tag);
    }
    criteria.push(c);

    let mut c = Criterion::new(3, "Central bound: f*g = N = g*f with N in F[Y]");
    for (k, tag) in desk {
        c = c.with(verify::central_bound(k, SEED, 200), tag);
    }
    criteria.push(c);

    let mut c = Criterion::new(4, "Sections: reconstruction, twisted products, shift by r");
    for (k, tag) in desk {
        c = c.with(verify::sections(k, SEED, 200), tag);
    }
    criteria.push(c);

    let mut c =
        Criterion::new(5, "Morphisms and derivations: multiplicativity, Leibniz, cocycle, commutation with sections");
    for (k, tag) in desk {
        c = c
            .with(verify::morphism_law(k, SEED, 200), tag)
            .with(verify::derivation_law(k, SEED, 200), tag)
            .with(verify::norm_cocycle(k, SEED, 200), tag)
            .with(verify::section_commutation(k, SEED, 200), tag);
    }
    criteria.push(c);

    let mut c = Criterion::new(6, "Canonical derivation: nilpotency, divided-power composition, p | r refusal");
    for (k, tag) in desk {
        c = c.with(verify::canonical_nilpotent(k, SEED, 100), tag).with(verify::divided_power_composition(k), tag);
    }
    c = c.with(verify::characteristic_restriction(&k4), "GF(4)");
    criteria.push(c);

    let mut c = Criterion::new(7, "Taylor expansions: multiplicative, Y -> z+T, N -> T, Hensel roots, round trip");
    for (k, tag) in desk {
        c = c
            .with(verify::taylor_multiplicative(k, SEED, 100), tag)
            .with(verify::taylor_generators(k, SEED, 20), tag)
            .with(verify::hensel_roots(k, SEED, 60), tag)
            .with(verify::taylor_round_trip(k, SEED, 100), tag)
            .with(verify::canonical_consistency(k, SEED, 100), tag)
            .with(verify::order_additivity(k, SEED, 100), tag);
    }
    c = c.with(verify::hensel_roots(&k4, SEED, 60), "GF(4)").with(verify::taylor_round_trip(&k4, SEED, 100), "GF(4)");
    criteria.push(c);

    let mut c = Criterion::new(8, "Choice invariance: orders, principal parts and sec_0 agree across expansions");
    for (k, tag) in desk {
        c = c.with(verify::choice_invariance(k, SEED, 200), tag);
    }
    criteria.push(c);

    let mut c = Criterion::new(9, "Bridge: partial skew residues equal classical residues of sections");
    for (k, tag) in desk {
        c = c.with(verify::bridge(k, SEED, 200), tag);
    }
    c = c.with(verify::bridge(&k4, SEED, 200), "GF(4)");
    criteria.push(c);

    let mut c = Criterion::new(10, "Residue theorem for j = 0 with poles up to order 3");
    for (k, tag) in desk {
        c = c.with(verify::residue_theorem_zero(k, SEED, 200), tag);
    }
    criteria.push(c);

    let mut c = Criterion::new(11, "Residue theorem for every j with simple poles, and the worked GF(5) breakdown");
    for (k, tag) in desk {
        c = c.with(verify::residue_theorem_all(k, SEED, 200), tag);
    }
    let worked = SkewFrac::new(SkewPoly::x(), Poly::from_ints(&[2, -3, 1], &k25), &k25).unwrap();
    let s = residue_sum(&worked, 1, &k25).unwrap();
    let expected = vec![
        (Point::Finite(Fe::ONE), k25.from_int(4)),
        (Point::Finite(k25.from_int(2)), Fe::ONE),
        (Point::Zero, Fe::ZERO),
        (Point::Infinity, Fe::ZERO),
    ];
    c = c.expect(s.sum.is_zero() && s.breakdown == expected, format!("worked breakdown {:?}", s.breakdown));
    criteria.push(c);

    let c = Criterion::new(12, "Zeta-root identity on GF(25)").with(verify::zeta_root(&k25, SEED, 100), "GF(25)");
    criteria.push(c);

    let mut c = Criterion::new(13, "Change of variables for central C in both regimes");
    for (k, tag) in desk {
        c = c.with(verify::change_of_variables(k, SEED, 100), tag);
    }
    criteria.push(c);

    let mut c = Criterion::new(14, "CLI: documented examples and selftest");
    let examples: [(&[&str], &str); 3] = [
        (&["div", "--mode", "right", "g*X^2+X+1", "X-g"], r#"{"Q":"g*X+4","R":"1+4*g"}"#),
        (
            &["check-residue-formula", "--j", "1", "X/((Y-1)*(Y-2))"],
            r#"{"sum":"0","breakdown":{"1":"4","2":"1","0":"0","inf":"0"}}"#,
        ),
        (&["taylor", "--point", "1", "--prec", "0", "--method", "canonical", "Y"], ""),
    ];
    for (args, want) in examples {
        let (out, code) = cli(args);
        let ok = if want.is_empty() {
            let v: serde_json::Value = serde_json::from_str(&out).unwrap_or_default();
            code == 0 && v["series"] == "1 + T"
        } else {
            code == 0 && out == want
        };
        c = c.expect(ok, format!("skewres {} -> {out} (exit {code})", args.join(" ")));
    }
    for config in ["gf25", "gf343", "gf4"] {
        let (out, code) = cli(&["--config", config, "--seed", "7", "selftest"]);
        let summary: serde_json::Value = serde_json::from_str(&out).unwrap_or_default();
        c = c.expect(code == 0, format!("selftest on {config}: exit {code}, {} checks failed", summary["failed"]));
    }
    criteria.push(c);

    for c in &criteria {
        c.report();
    }
    let failed = criteria.iter().filter(|c| !c.passed()).count();
    println!("{} of {} criteria passed in {:.1?}", criteria.len() - failed, criteria.len(), start.elapsed());
    if failed > 0 {
        std::process::exit(1);
    }
}
