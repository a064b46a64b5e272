//! Built-in verification scenarios, run by `inideal verify <name>` and by
//! the acceptance tests.

use std::collections::BTreeSet;

use inideal::betti::betti_comparison;
use inideal::family::{default_freeness_bound, homogenize_ideal};
use inideal::groebner::{buchberger, initial_ideal, initial_ideal_weight, presentation_kernel, toric_kernel};
use inideal::hilbert::{compare_hilbert, gorenstein_symmetry_check, hilbert_series_monomial};
use inideal::sagbi::{
    hilbert_series_subalgebra, initial_algebra_gens, presentation_series, sagbi_complete, verify_founda,
};
use inideal::weight::{certificate_is_valid, find_weight, represent_order_by_weight, ComparisonSet};
use inideal::{
    Coeff, Error, HilbertSeries, IdealGens, Monomial, OrderSpec, PolyRing, Polynomial, Ring, SagbiStatus,
    SubalgebraGens, WeightVector,
};

use crate::commands::{run, Command, Flags};
use crate::random::Generator;

/// One verified statement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub description: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScenarioReport {
    pub name: &'static str,
    pub criterion: u32,
    pub summary: &'static str,
    pub checks: Vec<Check>,
}

impl ScenarioReport {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    /// `PASS`/`FAIL` line per check, then a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("{} {}\n", if c.passed { "PASS" } else { "FAIL" }, c.description));
        }
        out.push_str(&format!(
            "{} {} ({}/{} checks)\n",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.checks.iter().filter(|c| c.passed).count(),
            self.checks.len()
        ));
        out
    }
}

type ScenarioFn = fn(&mut Vec<Check>) -> Result<(), Error>;

/// `(name, criterion number, summary, body)`.
pub const SCENARIOS: [(&str, u32, &str, ScenarioFn); 10] = [
    ("leading", 1, "leading monomials under lex, deglex and revlex", leading),
    ("nofinsagbi", 2, "truncated Sagbi completion of K[x+y, xy, xy^2]", nofinsagbi),
    ("kernels", 3, "presentation and toric kernels of the quadric algebra", kernels),
    ("founda", 4, "ini_b of the presentation kernel is the initial kernel", founda),
    ("initbyweight", 5, "weights representing orders and Farkas certificates", initbyweight),
    ("flatfamily", 6, "fibers and freeness of homogenized families", flatfamily),
    ("transfer", 7, "Hilbert functions and dimension agree across initial ideals", transfer),
    ("pdreg", 8, "Betti numbers, projdim and reg bounded by the initial ideal", pdreg),
    ("gorenstein", 9, "palindromic h-vector certificate", gorenstein),
    ("determinism", 10, "byte-identical reports across runs and generator permutations", determinism),
];

pub fn scenario_names() -> Vec<&'static str> {
    SCENARIOS.iter().map(|s| s.0).collect()
}

pub fn run_scenario(name: &str) -> Option<ScenarioReport> {
    let &(name, criterion, summary, body) = SCENARIOS.iter().find(|s| s.0 == name)?;
    let mut checks = Vec::new();
    if let Err(e) = body(&mut checks) {
        checks.push(Check { description: format!("unexpected error: {e}"), passed: false });
    }
    Some(ScenarioReport { name, criterion, summary, checks })
}

fn check(checks: &mut Vec<Check>, passed: bool, description: impl Into<String>) {
    checks.push(Check { description: description.into(), passed });
}

fn ring(names: &[&str]) -> Ring {
    PolyRing::new(names.iter().copied()).expect("valid variable names")
}

fn mono(e: &[u32]) -> Monomial {
    Monomial::new(e.to_vec())
}

fn lead(o: &OrderSpec, f: &Polynomial, r: &Ring) -> Result<String, Error> {
    Ok(o.leading_term(f)?.monomial().fmt_with(r))
}

const SEED: u64 = 20_240_601;
const RANDOM_CASES: u64 = 50;

fn leading(checks: &mut Vec<Check>) -> Result<(), Error> {
    let r = ring(&["X1", "X2", "X3", "X4"]);
    let f = Polynomial::parse(&r, "X1 + X2*X4 + X3^2")?;
    for (o, name, want) in [
        (OrderSpec::lex(), "lex", "X1"),
        (OrderSpec::deglex(), "deglex", "X2*X4"),
        (OrderSpec::revlex(), "revlex", "X3^2"),
    ] {
        let got = lead(&o, &f, &r)?;
        check(checks, got == want, format!("leading monomial of X1 + X2*X4 + X3^2 under {name} is {got}"));
    }
    Ok(())
}

fn nofinsagbi(checks: &mut Vec<Check>) -> Result<(), Error> {
    let r = ring(&["x", "y"]);
    let ones = WeightVector::ones(2);
    let x_first = SubalgebraGens::parse(&r, &["x + y", "x*y", "x*y^2"])?;
    let y_first = SubalgebraGens::parse(&r, &["x + y", "y*x", "y*x^2"])?;
    let variants = [
        ("x > y, lex", &x_first, OrderSpec::lex(), [1u32, 0], [0u32, 1]),
        ("x > y, deglex", &x_first, OrderSpec::deglex(), [1, 0], [0, 1]),
        ("y > x, lex(y,x)", &y_first, OrderSpec::parse("lex(y,x)", &r)?, [0, 1], [1, 0]),
        ("y > x, deglex(y,x)", &y_first, OrderSpec::parse("deglex(y,x)", &r)?, [0, 1], [1, 0]),
    ];
    for (label, gens, o, big, small) in variants {
        for d in [4u64, 6, 8] {
            let state = sagbi_complete(gens, &o, d)?;
            check(
                checks,
                state.status == SagbiStatus::TruncatedAtDegree(d),
                format!("{label}: completion with cap {d} reports {:?}", state.status),
            );
            let got: BTreeSet<Monomial> = initial_algebra_gens(&state, &o)?.into_iter().collect();
            let want: BTreeSet<Monomial> = (0..d as u32)
                .map(|k| mono(&[big[0] + k * small[0], big[1] + k * small[1]]))
                .collect();
            let shown: Vec<String> = got.iter().map(|m| m.fmt_with(&r)).collect();
            check(checks, got == want, format!("{label}: initial monomials up to degree {d} are {}", shown.join(", ")));
            let dmax = (d - 1) as usize;
            let table = hilbert_series_subalgebra(gens, &o, &ones, dmax)?.table;
            let expected = HilbertSeries::from_i64(&[1, -1, 1], &[1, 1])?.expand(dmax)?;
            let closed: Vec<u128> = (0..=dmax as u128).map(|k| k.max(1)).collect();
            check(
                checks,
                table == expected && table.values == closed,
                format!("{label}: Hilbert function to degree {dmax} is {}", table.to_csv()),
            );
        }
    }
    Ok(())
}

fn quadric_algebra() -> Result<SubalgebraGens, Error> {
    SubalgebraGens::parse(&ring(&["x", "y", "z"]), &["x^2 - z^2", "x*y", "y^2", "y*z"])
}

fn kernels(checks: &mut Vec<Check>) -> Result<(), Error> {
    let g = quadric_algebra()?;
    let k = presentation_kernel(g.gens())?.to_lines();
    check(checks, k == ["Y2^2 - Y1*Y3 - Y4^2"], format!("kernel of x^2 - z^2, xy, y^2, yz is ({})", k.join(", ")));
    let r = g.ring();
    let monos = [mono(&[2, 0, 0]), mono(&[1, 1, 0]), mono(&[0, 2, 0]), mono(&[0, 1, 1])];
    let t = toric_kernel(r, &monos)?.to_lines();
    check(checks, t == ["Y2^2 - Y1*Y3"], format!("toric kernel of x^2, xy, y^2, yz is ({})", t.join(", ")));
    Ok(())
}

fn founda(checks: &mut Vec<Check>) -> Result<(), Error> {
    let g = quadric_algebra()?;
    let a = WeightVector::new(vec![3, 2, 1])?;
    let rep = verify_founda(&g, &a, &OrderSpec::lex())?;
    check(checks, rep.b.entries() == [6, 5, 4, 3], format!("b = ({})", rep.b));
    let ini = rep.initial_of_kernel.to_lines();
    check(checks, ini == ["Y2^2 - Y1*Y3"], format!("ini_b(Y2^2 - Y1*Y3 - Y4^2) = {}", ini.join(", ")));
    check(checks, rep.holds, "ini_b of the kernel equals the kernel of the initial forms");
    Ok(())
}

/// `ini_a(I)`, from initial forms, has the same initial ideal as `ord` and
/// is itself monomial.
fn round_trip_closes(ideal: &IdealGens, ord: &OrderSpec) -> Result<bool, Error> {
    let a = represent_order_by_weight(ideal, ord)?;
    let regenerated = buchberger(&initial_ideal_weight(ideal, &a, ord)?, ord)?;
    Ok(regenerated.elements().iter().all(Polynomial::is_monomial)
        && regenerated.initial_ideal() == initial_ideal(ideal, ord)?)
}

fn initbyweight(checks: &mut Vec<Check>) -> Result<(), Error> {
    let r = ring(&["x", "y", "z"]);
    let i = IdealGens::parse(&r, &["x^2 - y", "x*y - z"])?;
    let a = represent_order_by_weight(&i, &OrderSpec::lex())?;
    let regenerated = buchberger(&initial_ideal_weight(&i, &a, &OrderSpec::lex())?, &OrderSpec::lex())?;
    let got: BTreeSet<String> = regenerated.elements().iter().map(|p| p.to_text()).collect();
    let want: BTreeSet<String> = ["x^2", "x*y", "x*z", "y^3"].iter().map(|s| s.to_string()).collect();
    check(checks, got == want, format!("weight ({a}) regenerates ini_lex(I) = ({})", got.into_iter().collect::<Vec<_>>().join(", ")));
    let set = ComparisonSet::new(2, vec![(mono(&[1, 0]), mono(&[0, 1])), (mono(&[0, 1]), mono(&[1, 0]))])?;
    match find_weight(&set) {
        Err(Error::Infeasible(c)) => {
            let shown: Vec<String> = c.iter().map(ToString::to_string).collect();
            check(
                checks,
                certificate_is_valid(&set, &c),
                format!("x > y, y > x is infeasible with certificate ({})", shown.join(", ")),
            );
        }
        other => check(checks, false, format!("x > y, y > x gave {other:?}")),
    }
    let mut gen = Generator::new(SEED);
    let mut closed = 0;
    for _ in 0..RANDOM_CASES {
        let ideal = gen.homogeneous_ideal(&r, 3);
        let mut ok = true;
        for o in [OrderSpec::lex(), OrderSpec::revlex()] {
            ok &= round_trip_closes(&ideal, &o)?;
        }
        closed += usize::from(ok);
    }
    check(
        checks,
        closed == RANDOM_CASES as usize,
        format!("round trip closes for {closed}/{RANDOM_CASES} random homogeneous ideals under lex and revlex"),
    );
    Ok(())
}

fn flatfamily(checks: &mut Vec<Check>) -> Result<(), Error> {
    let r = ring(&["x", "y", "z"]);
    let tie = OrderSpec::revlex();
    let mut gen = Generator::new(SEED + 1);
    let (one, zero) = (Coeff::from_integer(1.into()), Coeff::from_integer(0.into()));
    let mut counts = [0usize; 4];
    for _ in 0..RANDOM_CASES {
        let ideal = gen.ideal(&r, 3);
        let a = gen.weight(3, 2);
        let fam = homogenize_ideal(&ideal, &a, &tie)?;
        counts[0] += usize::from(buchberger(&fam.fiber(&one)?, &tie)? == buchberger(&ideal, &tie)?);
        let ini = initial_ideal_weight(&ideal, &a, &tie)?;
        counts[1] += usize::from(buchberger(&fam.fiber(&zero)?, &tie)? == buchberger(&ini, &tie)?);
        let bound = default_freeness_bound(&ideal, &a)?;
        counts[2] += usize::from(fam.freeness_basis_check(bound)?.holds());
        counts[3] += usize::from(fam.is_homogeneous());
    }
    let n = RANDOM_CASES as usize;
    check(checks, counts[0] == n, format!("fiber at t = 1 reproduces I for {}/{n} random ideals", counts[0]));
    check(checks, counts[1] == n, format!("fiber at t = 0 reproduces ini_a(I) for {}/{n}", counts[1]));
    check(checks, counts[2] == n, format!("freeness check passes at bound 2*maxdeg for {}/{n}", counts[2]));
    check(checks, counts[3] == n, format!("all total generators are a'-homogeneous for {}/{n}", counts[3]));
    Ok(())
}

fn transfer(checks: &mut Vec<Check>) -> Result<(), Error> {
    let r = ring(&["x", "y", "z"]);
    let mut gen = Generator::new(SEED + 2);
    let (mut functions, mut dims) = (0usize, 0usize);
    for _ in 0..RANDOM_CASES {
        let b = gen.weight(3, 2);
        let ideal = gen.graded_ideal(&r, &b, 3);
        let c = compare_hilbert(&ideal, &b, &OrderSpec::lex(), &OrderSpec::revlex(), 12)?;
        functions += usize::from(c.functions_agree());
        dims += usize::from(c.dimensions_agree());
    }
    let n = RANDOM_CASES as usize;
    check(checks, functions == n, format!("Hilbert functions of R/ini agree to degree 12 for {functions}/{n} b-graded ideals"));
    check(checks, dims == n, format!("Krull dimension is order-independent for {dims}/{n}"));
    Ok(())
}

fn pdreg(checks: &mut Vec<Check>) -> Result<(), Error> {
    let r2 = ring(&["x", "y"]);
    let r3 = ring(&["x", "y", "z"]);
    let o = OrderSpec::deglex();
    let diagonal = |c: &inideal::betti::BettiComparison| {
        c.ideal.entries().iter().map(|(&k, &v)| (k, v)).collect::<Vec<_>>() == [((0, 0), 1), ((1, 1), 2), ((2, 2), 1)]
    };
    let c = betti_comparison(&IdealGens::parse(&r2, &["x", "y"])?, &o, None)?;
    check(checks, c.is_equality() && diagonal(&c), "(x, y): beta = (1; 2; 1) on the diagonal, equal to the initial ideal");
    let c = betti_comparison(&IdealGens::parse(&r2, &["x^2", "x*y"])?, &o, None)?;
    check(
        checks,
        c.is_equality() && c.projdim == (2, 2) && c.reg == (1, 1),
        "(x^2, xy): equality, projdim 2, reg 1",
    );
    let c = betti_comparison(&IdealGens::parse(&r2, &["x^2 - y^2"])?, &o, None)?;
    check(checks, c.is_equality() && c.ideal.get(1, 2) == 1, "(x^2 - y^2): beta_{1,2} = 1 on both sides");
    let c = betti_comparison(&IdealGens::parse(&r3, &["x^2 - y*z", "x*y"])?, &o, None)?;
    check(
        checks,
        c.projdim.0 <= c.projdim.1 && c.reg.0 <= c.reg.1,
        format!("(x^2 - yz, xy): projdim {:?}, reg {:?}", c.projdim, c.reg),
    );
    let mut gen = Generator::new(SEED + 3);
    let mut ok = 0;
    for _ in 0..20 {
        let ideal = gen.homogeneous_ideal(&r3, 3);
        // Any violated inequality is an error, which fails the scenario.
        betti_comparison(&ideal, &o, None)?;
        ok += 1;
    }
    check(checks, ok == 20, format!("entrywise, projdim and reg inequalities hold for {ok}/20 random ideals"));
    Ok(())
}

fn gorenstein(checks: &mut Vec<Check>) -> Result<(), Error> {
    let s = presentation_series(&quadric_algebra()?)?.reduced();
    let want = HilbertSeries::from_i64(&[1, 1], &[1, 1, 1])?;
    check(checks, s == want, format!("normalized series of the quadric algebra reduces to {}", s.to_text()));
    check(checks, gorenstein_symmetry_check(&s)?, "its h-vector is palindromic");
    let r = ring(&["x", "y"]);
    let m = initial_ideal(&IdealGens::parse(&r, &["x^2", "x*y"])?, &OrderSpec::lex())?;
    let h = hilbert_series_monomial(&m, &WeightVector::ones(2))?.reduced();
    check(checks, !gorenstein_symmetry_check(&h)?, format!("R/(x^2, xy) reduces to {}, not palindromic", h.to_text()));
    Ok(())
}

/// A problem whose generator block can be permuted.
pub struct Fixture {
    pub name: &'static str,
    pub header: &'static str,
    pub block: &'static str,
    pub lines: &'static [&'static str],
    pub footer: &'static str,
}

impl Fixture {
    pub fn text(&self, reversed: bool) -> String {
        let mut lines: Vec<&str> = self.lines.to_vec();
        if reversed {
            lines.reverse();
        }
        format!("{}{}\n{}\nend\n{}", self.header, self.block, lines.join("\n"), self.footer)
    }
}

pub const FIXTURES: [Fixture; 6] = [
    Fixture {
        name: "twisted cubic",
        header: "ring x, y, z\norder lex\n",
        block: "ideal",
        lines: &["x^2 - y", "x*y - z"],
        footer: "dmax 6\n",
    },
    Fixture {
        name: "two quadrics",
        header: "ring x, y, z\norder deglex\n",
        block: "ideal",
        lines: &["x^2 - y*z", "x*y", "y^3 - z^3"],
        footer: "dmax 8\nfiber 2\n",
    },
    Fixture {
        name: "graded by weight",
        header: "ring x, y, z\norder revlex\nweight b 1 2 1\n",
        block: "ideal",
        lines: &["x^2 - y", "y*z - x*z^2", "x^4 + z^4"],
        footer: "dmax 9\n",
    },
    Fixture {
        name: "quadric algebra",
        header: "ring x, y, z\norder lex\n",
        block: "algebra",
        lines: &["x^2 - z^2", "x*y", "y^2", "y*z"],
        footer: "dmax 6\ncap 4\n",
    },
    Fixture {
        name: "no finite Sagbi basis",
        header: "ring x, y\norder deglex\n",
        block: "algebra",
        lines: &["x + y", "x*y", "x*y^2"],
        footer: "dmax 5\ncap 6\n",
    },
    Fixture {
        name: "comparisons",
        header: "ring x, y, z\n",
        block: "compare",
        lines: &["x > y", "y > z", "x*z > y^2"],
        footer: "",
    },
];

fn determinism(checks: &mut Vec<Check>) -> Result<(), Error> {
    let flags = Flags::default();
    for fx in &FIXTURES {
        let (mut same_runs, mut same_perm) = (true, true);
        for cmd in Command::ALL {
            let first = run(cmd, &fx.text(false), &flags);
            let second = run(cmd, &fx.text(false), &flags);
            let permuted = run(cmd, &fx.text(true), &flags);
            same_runs &= first == second;
            same_perm &= first == permuted;
        }
        check(checks, same_runs, format!("{}: every command is byte-identical across two runs", fx.name));
        check(checks, same_perm, format!("{}: every command is unchanged under generator permutation", fx.name));
    }
    Ok(())
}
