use std::fmt::Write as _;

use inideal::betti::{betti_degree_bound, graded_betti, projdim_and_reg};
use inideal::family::{default_freeness_bound, homogenize_ideal};
use inideal::groebner::{buchberger, initial_ideal, initial_ideal_weight, presentation_kernel};
use inideal::hilbert::{hilbert_series_monomial, krull_dim_monomial};
use inideal::sagbi::{hilbert_series_subalgebra, initial_algebra_gens, sagbi_complete, sagbi_test};
use inideal::weight::{find_weight, represent_order_by_weight, represent_sagbi_by_weight};
use inideal::{Error, IdealGens, OrderSpec, Polynomial, SagbiStatus, SubalgebraGens, WeightVector};

use crate::problem::{parse_coeff, parse_weight, Block, InputError, Problem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Command {
    /// Reduced Groebner basis.
    Gb,
    /// Initial ideal or initial algebra.
    Ini,
    /// Sagbi test, or completion with `--cap`.
    Sagbi,
    /// Weight vector realizing comparisons or an order.
    Weight,
    /// Homogenized family, fibers and freeness.
    Family,
    /// Hilbert series and function.
    Hilbert,
    /// Krull dimension.
    Dim,
    /// Graded Betti numbers.
    Betti,
}

impl Command {
    pub const ALL: [Command; 8] = [
        Command::Gb,
        Command::Ini,
        Command::Sagbi,
        Command::Weight,
        Command::Family,
        Command::Hilbert,
        Command::Dim,
        Command::Betti,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Gb => "gb",
            Command::Ini => "ini",
            Command::Sagbi => "sagbi",
            Command::Weight => "weight",
            Command::Family => "family",
            Command::Hilbert => "hilbert",
            Command::Dim => "dim",
            Command::Betti => "betti",
        }
    }
}

/// Command-line overrides; each takes precedence over the problem file.
#[derive(Debug, Clone, Default, PartialEq, Eq, clap::Args)]
pub struct Flags {
    /// Monomial order, e.g. `lex`, `revlex`, `lex(y,x)`, `weight(3,2,1; lex)`.
    #[arg(long)]
    pub order: Option<String>,
    /// Weight vector `a1,a2,...`.
    #[arg(long)]
    pub weight: Option<String>,
    /// Degree cap for Sagbi completion.
    #[arg(long)]
    pub cap: Option<u64>,
    /// Largest degree of Hilbert function tables.
    #[arg(long)]
    pub dmax: Option<usize>,
    /// Largest internal degree of Betti tables.
    #[arg(long)]
    pub jmax: Option<u64>,
    /// Parameter value `p/q` of the family fiber to print.
    #[arg(long)]
    pub fiber: Option<String>,
    /// Degree bound of the freeness check.
    #[arg(long = "freeness-bound")]
    pub freeness_bound: Option<u128>,
    /// Print the inequality system of `weight`.
    #[arg(long)]
    pub tableau: bool,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

enum Failure {
    Input(InputError),
    /// A mathematical answer of "no": report what was computed and exit 1.
    Infeasible(String),
    Core(Error),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

const DEFAULT_DMAX: usize = 10;

/// Parses `text` and runs `command`. Never panics on bad input.
pub fn run(command: Command, text: &str, flags: &Flags) -> Outcome {
    let result = Problem::parse(text).map_err(Failure::from).and_then(|p| execute(command, &p, flags));
    match result {
        Ok(stdout) => Outcome { stdout, stderr: String::new(), code: EXIT_OK },
        Err(Failure::Input(e)) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: EXIT_INPUT },
        Err(Failure::Infeasible(stdout)) => Outcome { stdout, stderr: String::new(), code: EXIT_INFEASIBLE },
        Err(Failure::Core(e)) => {
            let code = match e {
                Error::Infeasible(_) | Error::StepLimit(_) | Error::Inconsistency(_) => EXIT_INFEASIBLE,
                _ => EXIT_INPUT,
            };
            Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code }
        }
    }
}

struct Context<'a> {
    problem: &'a Problem,
    order: OrderSpec,
    order_text: String,
    weight: Option<WeightVector>,
    flags: &'a Flags,
}

fn execute(command: Command, problem: &Problem, flags: &Flags) -> Result<String, Failure> {
    let ring = &problem.ring;
    let (order, order_text) = match &flags.order {
        Some(t) => (
            OrderSpec::parse(t, ring).map_err(|e| InputError::general(format!("--order: {e}")))?,
            t.trim().to_string(),
        ),
        None => (problem.order.clone(), problem.order_text.clone()),
    };
    let weight = match &flags.weight {
        Some(t) => Some(parse_weight(t, ring.nvars()).map_err(|m| InputError::general(format!("--weight: {m}")))?),
        None => problem.weight_a.clone(),
    };
    let cx = Context { problem, order, order_text, weight, flags };
    match command {
        Command::Gb => gb(&cx),
        Command::Ini => ini(&cx),
        Command::Sagbi => sagbi(&cx),
        Command::Weight => weight_cmd(&cx),
        Command::Family => family(&cx),
        Command::Hilbert => hilbert(&cx),
        Command::Dim => dim(&cx),
        Command::Betti => betti(&cx),
    }
}

impl Context<'_> {
    fn ideal(&self, command: &str) -> Result<&IdealGens, Failure> {
        match &self.problem.block {
            Block::Ideal(i) => Ok(i),
            _ => Err(InputError::general(format!("`{command}` needs an `ideal` block")).into()),
        }
    }

    /// Generators sorted by leading monomial, then text, so that the input
    /// order does not affect any report.
    fn algebra(&self) -> Result<SubalgebraGens, Failure> {
        let Block::Algebra(g) = &self.problem.block else {
            unreachable!("checked by the caller")
        };
        let mut gens = g.gens().to_vec();
        let lead = |f: &Polynomial| self.order.leading_term(f).map(|t| t.monomial().exponents().to_vec());
        let mut keyed = Vec::with_capacity(gens.len());
        for f in gens.drain(..) {
            keyed.push((lead(&f)?, f.to_text(), f));
        }
        keyed.sort_by(|a, b| self.order.cmp_exponents(&a.0, &b.0).then_with(|| a.1.cmp(&b.1)));
        keyed.dedup_by(|a, b| a.2 == b.2);
        Ok(SubalgebraGens::new(g.ring(), keyed.into_iter().map(|k| k.2).collect())?)
    }

    fn cap(&self, gens: &SubalgebraGens) -> Result<u64, Failure> {
        if let Some(c) = self.flags.cap.or(self.problem.params.cap) {
            return Ok(c);
        }
        let mut d = 1;
        for g in gens.gens() {
            d = d.max(g.total_degree()?);
        }
        Ok(2 * d)
    }

    fn dmax(&self) -> usize {
        self.flags.dmax.or(self.problem.params.dmax).unwrap_or(DEFAULT_DMAX)
    }

    fn grading(&self) -> WeightVector {
        self.problem.weight_b.clone().unwrap_or_else(|| WeightVector::ones(self.problem.ring.nvars()))
    }

    fn lines(&self, polys: &[Polynomial], out: &mut String) {
        if polys.is_empty() {
            out.push_str("0\n");
        }
        for p in polys {
            out.push_str(&self.order.format(p));
            out.push('\n');
        }
    }
}

fn status_line(status: SagbiStatus) -> String {
    match status {
        SagbiStatus::Confirmed => "# status: confirmed\n".to_string(),
        SagbiStatus::TruncatedAtDegree(d) => format!("# status: truncated at degree {d}\n"),
    }
}

fn gb(cx: &Context) -> Result<String, Failure> {
    let basis = buchberger(cx.ideal("gb")?, &cx.order)?;
    let mut out = String::new();
    cx.lines(basis.elements(), &mut out);
    Ok(out)
}

fn ini(cx: &Context) -> Result<String, Failure> {
    let ring = &cx.problem.ring;
    let mut out = String::new();
    match &cx.problem.block {
        Block::Ideal(i) => match &cx.weight {
            Some(a) => {
                let forms = initial_ideal_weight(i, a, &cx.order)?;
                cx.lines(buchberger(&forms, &cx.order)?.elements(), &mut out);
            }
            None => {
                let m = initial_ideal(i, &cx.order)?;
                if m.is_zero() {
                    out.push_str("0\n");
                }
                let mut gens = m.mingens().to_vec();
                gens.sort_by(|u, v| cx.order.cmp_exponents(u.exponents(), v.exponents()));
                for g in gens {
                    let _ = writeln!(out, "{}", g.fmt_with(ring));
                }
            }
        },
        Block::Algebra(_) => {
            let gens = cx.algebra()?;
            let state = sagbi_complete(&gens, &cx.order, cx.cap(&gens)?)?;
            out.push_str(&status_line(state.status));
            for m in initial_algebra_gens(&state, &cx.order)? {
                let _ = writeln!(out, "{}", m.fmt_with(ring));
            }
        }
        Block::Compare(_) => return Err(InputError::general("`ini` needs an `ideal` or `algebra` block").into()),
    }
    Ok(out)
}

fn sagbi(cx: &Context) -> Result<String, Failure> {
    if !matches!(cx.problem.block, Block::Algebra(_)) {
        return Err(InputError::general("`sagbi` needs an `algebra` block").into());
    }
    let gens = cx.algebra()?;
    let mut out = String::new();
    match cx.flags.cap.or(cx.problem.params.cap) {
        Some(cap) => {
            let state = sagbi_complete(&gens, &cx.order, cap)?;
            out.push_str(&status_line(state.status));
            cx.lines(state.gens.gens(), &mut out);
        }
        None => {
            let test = sagbi_test(&gens, &cx.order)?;
            let _ = writeln!(out, "# sagbi test: {}", if test.passed { "passed" } else { "failed" });
            if !test.passed {
                out.push_str("# witnesses\n");
                cx.lines(&test.witnesses, &mut out);
            }
        }
    }
    Ok(out)
}

fn weight_cmd(cx: &Context) -> Result<String, Failure> {
    let mut out = String::new();
    let a = match &cx.problem.block {
        Block::Compare(set) => {
            if cx.flags.tableau {
                out.push_str(&set.tableau(&cx.problem.ring));
            }
            match find_weight(set) {
                Ok(a) => a,
                Err(Error::Infeasible(c)) => {
                    out.push_str("# infeasible: Farkas certificate\n");
                    let parts: Vec<String> = c.iter().map(ToString::to_string).collect();
                    let _ = writeln!(out, "{}", parts.join(" "));
                    return Err(Failure::Infeasible(out));
                }
                Err(e) => return Err(e.into()),
            }
        }
        Block::Ideal(i) => represent_order_by_weight(i, &cx.order)?,
        Block::Algebra(_) => represent_sagbi_by_weight(&cx.algebra()?, &cx.order)?,
    };
    let _ = writeln!(out, "{a}");
    Ok(out)
}

fn family(cx: &Context) -> Result<String, Failure> {
    let ideal = cx.ideal("family")?;
    let a = match &cx.weight {
        Some(a) => a.clone(),
        None => represent_order_by_weight(ideal, &cx.order)?,
    };
    let fam = homogenize_ideal(ideal, &a, &cx.order)?;
    let mut out = format!("# weight {a}\n# tiebreak {}\n", cx.order_text);
    let ext_order = fam.total().order().clone();
    if fam.total().is_empty() {
        out.push_str("0\n");
    }
    for g in fam.total().elements() {
        let _ = writeln!(out, "{}", ext_order.format(g));
    }
    let fiber = match &cx.flags.fiber {
        Some(t) => Some(parse_coeff(t).map_err(|m| InputError::general(format!("--fiber: {m}")))?),
        None => cx.problem.params.fiber.clone(),
    };
    if let Some(c) = fiber {
        let _ = writeln!(out, "# fiber at t = {c}");
        cx.lines(fam.fiber(&c)?.gens(), &mut out);
    }
    let bound = match cx.flags.freeness_bound.or(cx.problem.params.freeness_bound) {
        Some(b) => b,
        None => default_freeness_bound(ideal, &a)?,
    };
    let report = fam.freeness_basis_check(bound)?;
    let _ = writeln!(
        out,
        "# free up to degree {bound}: {}",
        if report.holds() { "yes" } else { "no" }
    );
    for d in report.degrees.iter().filter(|d| d.standard != d.codimension) {
        let _ = writeln!(out, "# degree {}: {} standard, codimension {}", d.degree, d.standard, d.codimension);
    }
    Ok(out)
}

fn hilbert(cx: &Context) -> Result<String, Failure> {
    let b = cx.grading();
    let dmax = cx.dmax();
    let mut out = String::new();
    match &cx.problem.block {
        Block::Ideal(i) => {
            if !i.is_graded(&b) {
                return Err(InputError::general(format!("the ideal is not graded for ({b})")).into());
            }
            let s = hilbert_series_monomial(&initial_ideal(i, &cx.order)?, &b)?;
            let _ = writeln!(out, "# hilbert series\n{}\n# reduced\n{}", s.to_text(), s.reduced().to_text());
            let _ = writeln!(out, "# hilbert function up to degree {dmax}\n{}", s.expand(dmax)?.to_csv());
        }
        Block::Algebra(_) => {
            let h = hilbert_series_subalgebra(&cx.algebra()?, &cx.order, &b, dmax)?;
            let _ = writeln!(out, "# hilbert function up to degree {dmax}\n{}", h.table.to_csv());
            out.push_str(&status_line(h.status));
        }
        Block::Compare(_) => return Err(InputError::general("`hilbert` needs an `ideal` or `algebra` block").into()),
    }
    Ok(out)
}

fn dim(cx: &Context) -> Result<String, Failure> {
    let d = match &cx.problem.block {
        Block::Ideal(i) => krull_dim_monomial(&initial_ideal(i, &cx.order)?),
        Block::Algebra(_) => {
            let kernel = presentation_kernel(cx.algebra()?.gens())?;
            krull_dim_monomial(&kernel.initial_ideal())
        }
        Block::Compare(_) => return Err(InputError::general("`dim` needs an `ideal` or `algebra` block").into()),
    };
    Ok(format!("{d}\n"))
}

fn betti(cx: &Context) -> Result<String, Failure> {
    let ideal = cx.ideal("betti")?;
    let jmax = match cx.flags.jmax.or(cx.problem.params.jmax) {
        Some(j) => j,
        None => betti_degree_bound(ideal)?,
    };
    let table = graded_betti(ideal, jmax)?;
    let mut out = table.to_text();
    if table.is_complete() {
        let (pd, reg) = projdim_and_reg(&table)?;
        let _ = writeln!(out, "# projdim {pd}\n# reg {reg}");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const CUBIC: &str = "ring x, y, z\norder lex\nideal\nx^2 - y\nx*y - z\nend\n";

    #[test]
    fn groebner_basis_report() {
        let o = run(Command::Gb, CUBIC, &Flags::default());
        assert_eq!(o.code, 0);
        assert_eq!(o.stdout, "y^3 - z^2\nx*z - y^2\nx*y - z\nx^2 - y\n");
    }

    #[test]
    fn exit_codes() {
        let bad = run(Command::Gb, "ring x\nideal\nx +\nend\n", &Flags::default());
        assert_eq!(bad.code, EXIT_INPUT);
        assert!(bad.stderr.starts_with("error: line 3"));
        let infeasible = run(Command::Weight, "ring x, y\ncompare\nx > y\ny > x\nend\n", &Flags::default());
        assert_eq!(infeasible.code, EXIT_INFEASIBLE);
        assert_eq!(infeasible.stdout, "# infeasible: Farkas certificate\n1 1\n");
        let wrong_block = run(Command::Sagbi, CUBIC, &Flags::default());
        assert_eq!(wrong_block.code, EXIT_INPUT);
    }

    #[test]
    fn flags_override_the_file() {
        let flags = Flags { order: Some("revlex".into()), ..Flags::default() };
        let o = run(Command::Ini, CUBIC, &flags);
        let lex = run(Command::Ini, CUBIC, &Flags::default());
        assert_eq!(lex.stdout, "y^3\nx*z\nx*y\nx^2\n");
        assert_ne!(o.stdout, lex.stdout);
    }
}
