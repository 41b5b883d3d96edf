use std::io::Read;
use std::path::Path;
use std::time::{Duration, Instant};

use frobrig::io::{parse_ring_file, write_ring_file, RingFile};
use frobrig::{
    chi, euler_data, frobenius_module, lichtenbaum_check, minimal_resolution, prop43_check, tor_frobenius, Budget,
    ElementSequence, Error, FrobeniusPower, GradedMatrix, OrderKind, PresentedModule,
};
use frobrig_paperlab::scenario::BudgetSpec;
use frobrig_paperlab::{run_scenario, scenario_ids, Scenario, Status as ScenarioStatus};
use serde_json::{json, Value};

use crate::output::{Failure, Reply, Status};
use crate::{parse_params, BudgetArgs, Command, Input};

type Outcome = Result<Reply, Failure>;

fn read_text(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Io(format!("standard input: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

/// Reads the input file, rewriting its `order` directive when `--order` is
/// given. The rewrite goes through the canonical file so that the ideal and
/// the module are re-entered under the new order.
fn load(input: &Input) -> Result<RingFile, Failure> {
    let file = parse_ring_file(&read_text(&input.file)?)?;
    let Some(order) = &input.order else {
        return Ok(file);
    };
    let kind = OrderKind::from_name(order)
        .ok_or_else(|| Failure::Usage(format!("unknown order `{order}`; expected grevlex, grlex or lex")))?;
    let text = write_ring_file(file.name.as_deref(), &file.ring, file.module.as_ref());
    let text: String = text
        .lines()
        .map(|l| {
            if l.starts_with("order ") {
                format!("order {}\n", kind.name())
            } else {
                format!("{l}\n")
            }
        })
        .collect();
    Ok(parse_ring_file(&text)?)
}

fn budget(b: &BudgetArgs) -> Budget {
    Budget {
        max_degree: b.max_degree,
        max_elements: None,
        deadline: b.time_limit.map(|s| Instant::now() + Duration::from_secs(s)),
    }
}

fn check_steps(steps: usize, b: &BudgetArgs) -> Result<(), Failure> {
    match b.max_steps {
        Some(max) if steps > max => Err(Failure::Engine(Error::Budget(format!(
            "{steps} steps requested, the cap is {max}"
        )))),
        _ => Ok(()),
    }
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(|x| x.to_string()).collect()
}

fn sequence(file: &RingFile, seq: &str) -> Result<ElementSequence, Failure> {
    let parts: Vec<&str> = seq.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    Ok(ElementSequence::parse(&file.ring, &parts)?)
}

fn betti_text(betti: &frobrig::BettiTable) -> Vec<String> {
    let mut lines = Vec::new();
    for (i, j, b) in betti.entries() {
        lines.push(format!("beta[{i},{j}] = {b}"));
    }
    lines.push(format!("totals: {}", strings(&betti.totals()).join(" ")));
    lines
}

fn matrix_json(m: &GradedMatrix) -> Value {
    json!({
        "target": m.target(),
        "source": m.source(),
        "rows": m.rows_as_strings(),
    })
}

fn module_json(m: &PresentedModule) -> Value {
    json!({
        "twists": m.generator_degrees(),
        "relations": m.presentation().rows_as_strings(),
        "length": m.length(),
    })
}

pub fn dispatch(command: &Command, args: &BudgetArgs) -> Outcome {
    let b = budget(args);
    match command {
        Command::Gb(input) => {
            let f = load(input)?;
            let basis = strings(&f.ring.ideal().basis());
            Ok(Reply::ok("gb", json!(basis), basis))
        }
        Command::Nf { input, poly } => {
            let f = load(input)?;
            let g = f.ring.parse(poly)?;
            let nf = f.ring.normal_form(&g)?.to_string();
            Ok(Reply::ok("nf", json!({ "normal_form": nf }), vec![nf]))
        }
        Command::Colon { input, by } => {
            let f = load(input)?;
            let g = f.ring.ambient().parse(by)?;
            let basis = strings(&f.ring.ideal().colon(&g)?.basis());
            Ok(Reply::ok("colon", json!(basis), basis))
        }
        Command::Bracket { input, q } => {
            let f = load(input)?;
            let basis = strings(&f.ring.ideal().bracket_power(*q)?.basis());
            Ok(Reply::ok("bracket", json!(basis), basis))
        }
        Command::Dim(input) => {
            let d = load(input)?.module_or_ring().dimension()?;
            Ok(Reply::ok("dim", json!({ "dimension": d }), vec![format!("dimension {d}")]))
        }
        Command::Length(input) => {
            let l = load(input)?.module_or_ring().length();
            Ok(Reply::ok("length", json!({ "length": l }), vec![format!("length {l}")]))
        }
        Command::Depth(input) => {
            let d = load(input)?.module_or_ring().depth(&b)?;
            Ok(Reply::ok("depth", json!({ "depth": d }), vec![format!("depth {d}")]))
        }
        Command::Resolve { input, steps } => {
            check_steps(*steps, args)?;
            let m = load(input)?.module_or_ring();
            let res = minimal_resolution(&m, *steps, &b)?;
            let maps: Vec<Value> = res.complex.differentials().iter().map(matrix_json).collect();
            let mut text = Vec::new();
            for (i, d) in res.complex.differentials().iter().enumerate() {
                text.push(format!("d{}: R^{} <- R^{}", i + 1, d.nrows(), d.ncols()));
                for row in d.rows_as_strings() {
                    text.push(format!("  [{}]", row.join(", ")));
                }
            }
            let exact = res.exact_through(*steps);
            let reply = Reply::ok(
                "resolve",
                json!({
                    "ranks": res.complex.ranks(),
                    "differentials": maps,
                    "finished": res.finished,
                    "truncated": res.truncated,
                    "degree_cap": res.degree_cap,
                }),
                text,
            );
            Ok(if exact {
                reply
            } else {
                reply.with_status(Status::Indeterminate, Some("BUDGET_EXCEEDED"))
            })
        }
        Command::Betti { input, steps, pd } => {
            check_steps(*steps, args)?;
            let m = load(input)?.module_or_ring();
            if *pd {
                let v = m.is_finite_pd(&b)?;
                let mut text = betti_text(&v.betti);
                text.push(format!("pd finite: {}", v.finite));
                return Ok(Reply::ok(
                    "betti",
                    json!({
                        "betti": v.betti,
                        "pd_finite": v.finite,
                        "pd": v.pd,
                        "depth_ring": v.depth_ring,
                        "certified_degree": v.certified_degree,
                    }),
                    text,
                ));
            }
            let res = minimal_resolution(&m, *steps, &b)?;
            let reply = Reply::ok(
                "betti",
                json!({
                    "betti": res.betti,
                    "totals": res.betti.totals(),
                    "finished": res.finished,
                    "degree_cap": res.degree_cap,
                }),
                betti_text(&res.betti),
            );
            Ok(if res.exact_through(*steps) {
                reply
            } else {
                reply.with_status(Status::Indeterminate, Some("BUDGET_EXCEEDED"))
            })
        }
        Command::Frobenius { input, n } => {
            let file = load(input)?;
            let f = FrobeniusPower::new(&file.ring, *n)?;
            let fm = frobenius_module(&file.module_or_ring(), &f)?;
            let text = write_ring_file(None, &file.ring, Some(&fm));
            let mut result = module_json(&fm);
            result["n"] = json!(n);
            result["q"] = json!(f.q());
            Ok(Reply::ok("frobenius", result, text.lines().map(String::from).collect()))
        }
        Command::Tor { input, i, n } => {
            let file = load(input)?;
            let f = FrobeniusPower::new(&file.ring, *n)?;
            let t = tor_frobenius(&file.module_or_ring(), &f, *i, &b)?;
            let l = t.length();
            Ok(Reply::ok(
                "tor",
                json!({ "i": i, "n": n, "q": f.q(), "zero": t.is_zero(), "length": l }),
                vec![format!("Tor_{i}(M, f^{n}R): length {l}")],
            ))
        }
        Command::Chi { input, seq, i } => {
            let file = load(input)?;
            let m = file.module_or_ring();
            let mut x = sequence(&file, seq)?;
            if let Some(i) = i {
                let v = chi(&m, &mut x, *i, &b)?;
                let reply = Reply::ok("chi", json!({ "i": i, "chi_i": v }), vec![format!("chi_{i} = {v}")]);
                return Ok(if v < 0 {
                    reply.with_status(Status::Fail, Some("NEGATIVE_EULER_CHARACTERISTIC"))
                } else {
                    reply
                });
            }
            let report = lichtenbaum_check(&m, &mut x, &b)?;
            let data = euler_data(&m, &mut x, &b)?;
            let mut text = vec![
                format!("Tor lengths: {}", strings(&data.tor_lengths).join(" ")),
                format!("chi_i: {}", strings(&data.chi_i).join(" ")),
                format!("chi = {}", data.chi),
            ];
            text.extend(report.violations.iter().map(|v| format!("violation: {v}")));
            let passed = report.passed();
            let reply = Reply::ok("chi", serde_json::to_value(&report).expect("serializable"), text);
            Ok(if passed {
                reply
            } else {
                reply.with_status(Status::Fail, Some("THEOREM_VIOLATION"))
            })
        }
        Command::CheckProp43 { input, seq, n } => {
            let file = load(input)?;
            let m = file.module_or_ring();
            let mut x = sequence(&file, seq)?;
            let f = FrobeniusPower::new(&file.ring, *n)?;
            let report = prop43_check(&m, &mut x, &f, &b)?;
            let mut text = vec![
                format!("left  l(F^n(M)/xF^n(M)) = {}", report.left),
                format!("right q^c chi(M, R/x)   = {} (q = {}, c = {})", report.right, report.q, report.c),
                format!("equality: {}", report.equality),
            ];
            text.extend(report.assumptions.iter().map(|a| format!("assumption: {a}")));
            text.extend(report.violations.iter().map(|v| format!("violation: {v}")));
            let passed = report.passed();
            let reply = Reply::ok("check-prop43", serde_json::to_value(&report).expect("serializable"), text);
            Ok(if passed {
                reply
            } else {
                reply.with_status(Status::Fail, Some("THEOREM_VIOLATION"))
            })
        }
        Command::Verify { scenario, p, n, params } => {
            let s = if Path::new(scenario).is_file() {
                Scenario::parse(&read_text(Path::new(scenario))?)?
            } else {
                Scenario::builtin(scenario)?
            };
            let mut over = parse_params(params).map_err(Failure::Usage)?;
            if let Some(p) = p {
                over.insert("p".into(), *p);
            }
            if let Some(n) = n {
                over.insert("n".into(), *n);
            }
            let spec = BudgetSpec {
                max_degree: args.max_degree,
                max_elements: None,
                seconds: args.time_limit,
            };
            let report = run_scenario(&s, &over, &spec)?;
            let mut text = Vec::new();
            for a in &report.assertions {
                let actual = a.actual.as_deref().unwrap_or("-");
                let mut line = format!("{} {}: expected {}, got {}", a.status.as_str(), a.check, a.expected, actual);
                if let Some(r) = &a.reason {
                    line.push_str(&format!(" ({r})"));
                }
                text.push(line);
            }
            let first_reason = |st: ScenarioStatus| {
                report
                    .assertions
                    .iter()
                    .find(|a| a.status == st)
                    .and_then(|a| a.reason.clone())
            };
            let (status, reason) = match report.status {
                ScenarioStatus::Pass => (Status::Pass, None),
                ScenarioStatus::Fail => (Status::Fail, first_reason(ScenarioStatus::Fail)),
                ScenarioStatus::Indeterminate => {
                    (Status::Indeterminate, first_reason(ScenarioStatus::Indeterminate))
                }
            };
            let reason = reason.or_else(|| (status != Status::Pass).then(|| "MISMATCH".to_string()));
            let value = serde_json::to_value(&report).expect("serializable");
            Ok(Reply::ok("verify", value, text).with_status(status, reason.as_deref()))
        }
        Command::Scenarios => {
            let mut list = Vec::new();
            let mut text = Vec::new();
            for id in scenario_ids() {
                let s = Scenario::builtin(id)?;
                text.push(format!("{id}: {}", s.about));
                list.push(json!({ "id": id, "about": s.about }));
            }
            Ok(Reply::ok("scenarios", json!(list), text))
        }
    }
}
