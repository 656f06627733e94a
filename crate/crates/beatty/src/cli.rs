//! Command line front end. One verb per library operation; deterministic
//! output; exit code 0 when the requested property holds, 1 when it fails,
//! 2 for usage or domain errors.

use clap::{arg, value_parser, ArgMatches, Command};
use serde_json::json;

use crate::gbs::{fit_from_terms, Gbs, GbsError};
use crate::pairs::{
    divides_odd_index_fib, neg_one_square_mod, pair_search, pair_to_triple, partition_check_gbs,
    PartitionReport,
};
use crate::parse::{parse_alpha, parse_gbs, parse_morphism, parse_triple, parse_word};
use crate::report::{emit, Format, Report};
use crate::returns::{
    gbs_union_decompose, gbs_union_decompose_diagnostic, kimberling_transform, occurrence_gbs,
    return_words, transform_gbs, ReturnsError, DEFAULT_CORPUS_DEPTH,
};
use crate::words::{fibonacci_word, Word};

type Outcome = Result<(i32, String), (i32, String)>;

fn usage<E: std::fmt::Display>(e: E) -> (i32, String) {
    (2, format!("error: {e}\n"))
}

fn depth_arg() -> clap::Arg {
    arg!(--depth <N> "verification depth (at least 2)")
        .value_parser(value_parser!(i64).range(2..))
        .default_value("10000")
}

fn command() -> Command {
    Command::new("beatty")
        .about("exact arithmetic for generalized Beatty sequences")
        .subcommand_required(true)
        .arg_required_else_help(true)
        .subcommand(
            Command::new("eval")
                .about("list the first terms of a sequence")
                .arg(arg!(--gbs <SPEC> "sequence, e.g. gbs:1,0,0@golden#1").required(true))
                .arg(
                    arg!(--n <COUNT> "number of terms")
                        .value_parser(value_parser!(u64).range(1..))
                        .default_value("10"),
                )
                .arg(arg!(--format <FORMAT> "json|csv|bfile")),
        )
        .subcommand(
            Command::new("diff-word")
                .about("difference word of a sequence")
                .arg(arg!(--gbs <SPEC> "sequence to difference").required(true))
                .arg(
                    arg!(--n <COUNT> "number of terms to difference")
                        .value_parser(value_parser!(u64).range(2..))
                        .default_value("30"),
                ),
        )
        .subcommand(
            Command::new("fit")
                .about("recover coefficients from consecutive terms")
                .arg(arg!(--alpha <ALPHA> "golden, sqrt:<d>, or quad:a,b,c,d").required(true))
                .arg(
                    arg!(--terms <TERMS> "comma-separated integer terms")
                        .allow_hyphen_values(true)
                        .required(true),
                )
                .arg(
                    arg!(--start <INDEX> "index of the first term")
                        .value_parser(value_parser!(u64))
                        .default_value("1"),
                ),
        )
        .subcommand(
            Command::new("fixpoint")
                .about("prefix of the fixed point of a morphism")
                .arg(arg!(--morphism <RULES> "rules such as 0>01;1>011").required(true))
                .arg(arg!(--letter <LETTER> "seed letter (defaults to first prolongable)"))
                .arg(
                    arg!(--n <LEN> "prefix length")
                        .value_parser(value_parser!(u64).range(1..))
                        .default_value("50"),
                ),
        )
        .subcommand(
            Command::new("pair-check")
                .about("check that two sequences partition the positive integers")
                .arg(
                    arg!(--v <TRIPLE> "p,q,r with optional #start (default start 1)")
                        .allow_hyphen_values(true)
                        .required(true),
                )
                .arg(
                    arg!(--w <TRIPLE> "p,q,r with optional #start")
                        .allow_hyphen_values(true)
                        .required(true),
                )
                .arg(arg!(--alpha <ALPHA> "common alpha of both sequences").required(true))
                .arg(depth_arg())
                .arg(arg!(--format <FORMAT> "json|csv")),
        )
        .subcommand(
            Command::new("pair-search")
                .about("find all complementary increasing pairs for an alpha")
                .arg(arg!(--alpha <ALPHA> "slope to search over").required(true))
                .arg(depth_arg())
                .arg(arg!(--format <FORMAT> "json|csv")),
        )
        .subcommand(
            Command::new("triple-check")
                .about("split a golden pair into a complementary triple and check it")
                .arg(
                    arg!(--v <TRIPLE> "sequence to split, p,q,r with optional #start")
                        .allow_hyphen_values(true)
                        .required(true),
                )
                .arg(
                    arg!(--w <TRIPLE> "companion sequence")
                        .allow_hyphen_values(true)
                        .required(true),
                )
                .arg(depth_arg())
                .arg(arg!(--format <FORMAT> "json|csv")),
        )
        .subcommand(
            Command::new("pell")
                .about("Pell witness for p dividing an odd-indexed Fibonacci number")
                .arg(
                    arg!(--p <P> "positive integer to test")
                        .value_parser(value_parser!(i64).range(1..))
                        .required(true),
                ),
        )
        .subcommand(
            Command::new("returns")
                .about("return words of a factor of the Fibonacci word")
                .arg(arg!(--w <WORD> "factor as a digit string").required(true))
                .arg(arg!(--format <FORMAT> "json")),
        )
        .subcommand(
            Command::new("transform")
                .about("collapse occurrences of a factor to the letter 2")
                .arg(arg!(--w <WORD> "factor as a digit string").required(true))
                .arg(
                    arg!(--n <LEN> "transform prefix length to print")
                        .value_parser(value_parser!(u64).range(1..))
                        .default_value("20"),
                )
                .arg(arg!(--format <FORMAT> "json")),
        )
        .subcommand(
            Command::new("decompose")
                .about("write each letter of the transform as a union of sequences")
                .arg(arg!(--w <WORD> "factor as a digit string").required(true))
                .arg(depth_arg())
                .arg(arg!(--diagnostic "allow factors violating the small-prefix condition"))
                .arg(arg!(--format <FORMAT> "json")),
        )
}

pub fn run(argv: &[String]) -> (i32, String) {
    let matches = match command().try_get_matches_from(argv) {
        Ok(m) => m,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            return (code, e.to_string());
        }
    };
    let outcome = match matches.subcommand() {
        Some(("eval", m)) => cmd_eval(m),
        Some(("diff-word", m)) => cmd_diff_word(m),
        Some(("fit", m)) => cmd_fit(m),
        Some(("fixpoint", m)) => cmd_fixpoint(m),
        Some(("pair-check", m)) => cmd_pair_check(m),
        Some(("pair-search", m)) => cmd_pair_search(m),
        Some(("triple-check", m)) => cmd_triple_check(m),
        Some(("pell", m)) => cmd_pell(m),
        Some(("returns", m)) => cmd_returns(m),
        Some(("transform", m)) => cmd_transform(m),
        Some(("decompose", m)) => cmd_decompose(m),
        _ => unreachable!("subcommand is required"),
    };
    match outcome {
        Ok(pair) | Err(pair) => pair,
    }
}

fn format_flag(m: &ArgMatches) -> Result<Option<Format>, (i32, String)> {
    match m.get_one::<String>("format") {
        None => Ok(None),
        Some(s) => match Format::parse(s) {
            Some(f) => Ok(Some(f)),
            None => Err(usage(format!("unknown format {s:?}"))),
        },
    }
}

fn word_text(w: &Word) -> String {
    if w.is_empty() {
        "(empty)".to_string()
    } else {
        w.to_string()
    }
}

fn triple_gbs(text: &str, alpha: &crate::quad::QuadraticIrrational) -> Result<Gbs, (i32, String)> {
    let (p, q, r, start) = parse_triple(text).map_err(usage)?;
    Gbs::new(p, q, r, *alpha, start).map_err(usage)
}

fn partition_text(report: &PartitionReport) -> String {
    if report.is_exact() {
        return format!("exact partition of [1, {}]\n", report.depth);
    }
    let mut out = format!("failed over [1, {}]\n", report.depth);
    if !report.missing.is_empty() {
        let vals: Vec<String> = report.missing.iter().map(i64::to_string).collect();
        out.push_str(&format!("missing: {}\n", vals.join(" ")));
    }
    if !report.collisions.is_empty() {
        let vals: Vec<String> = report
            .collisions
            .iter()
            .map(|(v, c)| format!("{v} (x{c})"))
            .collect();
        out.push_str(&format!("collisions: {}\n", vals.join(" ")));
    }
    out
}

fn render_partition(report: PartitionReport, format: Option<Format>) -> Outcome {
    let code = if report.is_exact() { 0 } else { 1 };
    let text = match format {
        None => partition_text(&report),
        Some(f) => emit(&Report::Partition(report), f).map_err(usage)?,
    };
    Ok((code, text))
}

fn returns_exit(e: &ReturnsError) -> i32 {
    match e {
        ReturnsError::Overlapping(_) | ReturnsError::Sr0Violated(_) => 1,
        _ => 2,
    }
}

fn returns_err(e: ReturnsError) -> (i32, String) {
    (returns_exit(&e), format!("error: {e}\n"))
}

fn cmd_eval(m: &ArgMatches) -> Outcome {
    let g = parse_gbs(m.get_one::<String>("gbs").expect("required")).map_err(usage)?;
    let count = *m.get_one::<u64>("n").expect("defaulted");
    let format = format_flag(m)?.unwrap_or(Format::Bfile);
    let terms: Vec<(u64, i64)> = (g.start()..g.start() + count)
        .map(|n| (n, g.eval(n).expect("n is in range")))
        .collect();
    let text = emit(&Report::Terms(terms), format).map_err(usage)?;
    Ok((0, text))
}

fn cmd_diff_word(m: &ArgMatches) -> Outcome {
    let g = parse_gbs(m.get_one::<String>("gbs").expect("required")).map_err(usage)?;
    let count = *m.get_one::<u64>("n").expect("defaulted");
    let word = g.difference_word(count as usize);
    Ok((0, format!("{word}\n")))
}

fn cmd_fit(m: &ArgMatches) -> Outcome {
    let alpha = parse_alpha(m.get_one::<String>("alpha").expect("required")).map_err(usage)?;
    let start = *m.get_one::<u64>("start").expect("defaulted");
    let terms_text = m.get_one::<String>("terms").expect("required");
    let terms: Vec<i64> = terms_text
        .split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| usage(format!("malformed term list {terms_text:?}")))?;
    match fit_from_terms(&alpha, &terms, start) {
        Ok(g) => Ok((0, format!("{g}\n"))),
        Err(
            e @ (GbsError::FitMismatch { .. }
            | GbsError::FitNonIntegral
            | GbsError::FitUndetermined),
        ) => Err((1, format!("no fit: {e}\n"))),
        Err(e) => Err(usage(e)),
    }
}

fn cmd_fixpoint(m: &ArgMatches) -> Outcome {
    let mu = parse_morphism(m.get_one::<String>("morphism").expect("required")).map_err(usage)?;
    let len = *m.get_one::<u64>("n").expect("defaulted") as usize;
    let seed = match m.get_one::<String>("letter") {
        Some(s) => {
            let w = parse_word(s).map_err(usage)?;
            if w.len() != 1 {
                return Err(usage("seed must be a single letter"));
            }
            w.letters()[0]
        }
        None => mu
            .alphabet()
            .into_iter()
            .find(|&l| mu.is_prolongable_on(l))
            .ok_or_else(|| usage("morphism is not prolongable on any letter"))?,
    };
    let w = mu.fixed_point(seed, len).map_err(usage)?;
    Ok((0, format!("{}\n", w.prefix(len))))
}

fn cmd_pair_check(m: &ArgMatches) -> Outcome {
    let alpha = parse_alpha(m.get_one::<String>("alpha").expect("required")).map_err(usage)?;
    let v = triple_gbs(m.get_one::<String>("v").expect("required"), &alpha)?;
    let w = triple_gbs(m.get_one::<String>("w").expect("required"), &alpha)?;
    let depth = *m.get_one::<i64>("depth").expect("defaulted");
    let format = format_flag(m)?;
    let report = partition_check_gbs(&[v, w], depth).map_err(usage)?;
    render_partition(report, format)
}

fn cmd_pair_search(m: &ArgMatches) -> Outcome {
    let alpha = parse_alpha(m.get_one::<String>("alpha").expect("required")).map_err(usage)?;
    let depth = *m.get_one::<i64>("depth").expect("defaulted");
    let format = format_flag(m)?;
    let solutions = pair_search(&alpha, depth, 5_000_000).map_err(usage)?;
    let six: Vec<[i64; 6]> = solutions.iter().map(|s| s.sixtuple()).collect();
    let text = match format {
        None => {
            let mut out = String::new();
            for s in &six {
                let row: Vec<String> = s.iter().map(i64::to_string).collect();
                out.push_str(&format!("({})\n", row.join(",")));
            }
            out
        }
        Some(f) => emit(&Report::Solutions(six), f).map_err(usage)?,
    };
    Ok((0, text))
}

fn cmd_triple_check(m: &ArgMatches) -> Outcome {
    let golden = crate::quad::QuadraticIrrational::golden();
    let v = triple_gbs(m.get_one::<String>("v").expect("required"), &golden)?;
    let w = triple_gbs(m.get_one::<String>("w").expect("required"), &golden)?;
    let depth = *m.get_one::<i64>("depth").expect("defaulted");
    let format = format_flag(m)?;
    let (va, vb, w) = pair_to_triple(&v, &w).map_err(usage)?;
    let report = partition_check_gbs(&[va, vb, w], depth).map_err(usage)?;
    let mut prefix = String::new();
    if format.is_none() {
        prefix = format!("components: {va} {vb} {w}\n");
    }
    let (code, text) = render_partition(report, format)?;
    Ok((code, format!("{prefix}{text}")))
}

fn cmd_pell(m: &ArgMatches) -> Outcome {
    let p = *m.get_one::<i64>("p").expect("required");
    let divides = divides_odd_index_fib(p);
    let square = neg_one_square_mod(p);
    let mut out = format!(
        "p = {p}\ndivides an odd-indexed Fibonacci number: {}\n-1 is a square mod p: {}\n",
        if divides { "yes" } else { "no" },
        if square { "yes" } else { "no" },
    );
    match crate::pairs::pell_witness(p) {
        Some((x, y)) => {
            use num_bigint::BigInt;
            let pp = BigInt::from(p);
            let lhs = 5 * &pp * &pp * &x * &x - 4 * &x;
            assert_eq!(lhs, &y * &y, "witness must satisfy the Pell identity");
            out.push_str(&format!("witness: x = {x}, y = {y}\n"));
            out.push_str("identity 5 p^2 x^2 - 4 x = y^2 verified\n");
            Ok((0, out))
        }
        None => {
            out.push_str("no witness: p divides no odd-indexed Fibonacci number\n");
            Err((1, out))
        }
    }
}

fn cmd_returns(m: &ArgMatches) -> Outcome {
    let w = parse_word(m.get_one::<String>("w").expect("required")).map_err(usage)?;
    let format = format_flag(m)?;
    let rs = return_words(&w, DEFAULT_CORPUS_DEPTH).map_err(returns_err)?;
    let occ = occurrence_gbs(&w).map_err(returns_err)?;
    let text = match format {
        Some(Format::Json) => {
            let value = json!({
                "w": w.to_string(),
                "r0": rs.r0.to_string(),
                "r1": rs.r1.to_string(),
                "r2": rs.r2.to_string(),
                "k": rs.k,
                "occurrences": occ.to_string(),
                "triple": [occ.p(), occ.q(), occ.r()],
            });
            format!("{value}\n")
        }
        Some(_) => return Err(usage("format does not apply to this report")),
        None => format!(
            "r0 = {}\nr1 = {}\nr2 = {}\noccurrences: {}\n",
            word_text(&rs.r0),
            word_text(&rs.r1),
            word_text(&rs.r2),
            occ,
        ),
    };
    Ok((0, text))
}

fn cmd_transform(m: &ArgMatches) -> Outcome {
    let w = parse_word(m.get_one::<String>("w").expect("required")).map_err(usage)?;
    let len = *m.get_one::<u64>("n").expect("defaulted") as usize;
    let format = format_flag(m)?;
    let g = transform_gbs(&w).map_err(returns_err)?;
    let corpus = fibonacci_word(((len + 8) * (w.len() + 1)).max(1000));
    let y = kimberling_transform(&corpus, &w).prefix(len);
    let text = match format {
        Some(Format::Json) => {
            let value = json!({
                "w": w.to_string(),
                "transform": y.to_string(),
                "gbs": g.to_string(),
                "triple": [g.p(), g.q(), g.r()],
            });
            format!("{value}\n")
        }
        Some(_) => return Err(usage("format does not apply to this report")),
        None => format!("{y}\n({},{},{})\n", g.p(), g.q(), g.r()),
    };
    Ok((0, text))
}

fn cmd_decompose(m: &ArgMatches) -> Outcome {
    let w = parse_word(m.get_one::<String>("w").expect("required")).map_err(usage)?;
    let depth = *m.get_one::<i64>("depth").expect("defaulted") as usize;
    let diagnostic = m.get_flag("diagnostic");
    let format = format_flag(m)?;

    let (map, uncovered) = if diagnostic {
        gbs_union_decompose_diagnostic(&w, depth).map_err(returns_err)?
    } else {
        let map = gbs_union_decompose(&w, depth).map_err(returns_err)?;
        (map, Default::default())
    };
    let all_covered = uncovered.values().all(Vec::is_empty);
    let code = if all_covered { 0 } else { 1 };
    let text = match format {
        Some(Format::Json) => {
            let components: serde_json::Map<String, serde_json::Value> = map
                .iter()
                .map(|(letter, union)| {
                    let list: Vec<String> =
                        union.components.iter().map(Gbs::to_string).collect();
                    (letter.to_string(), json!(list))
                })
                .collect();
            let missing: serde_json::Map<String, serde_json::Value> = uncovered
                .iter()
                .map(|(letter, values)| (letter.to_string(), json!(values)))
                .collect();
            format!("{}\n", json!({ "components": components, "uncovered": missing }))
        }
        Some(_) => return Err(usage("format does not apply to this report")),
        None => {
            let mut out = String::new();
            for (letter, union) in &map {
                let list: Vec<String> = union.components.iter().map(Gbs::to_string).collect();
                out.push_str(&format!("letter {letter}: {}\n", list.join(" ")));
            }
            for (letter, values) in &uncovered {
                if !values.is_empty() {
                    let vals: Vec<String> = values.iter().map(i64::to_string).collect();
                    out.push_str(&format!("uncovered {letter}: {}\n", vals.join(" ")));
                }
            }
            out
        }
    };
    Ok((code, text))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_cmd(args: &[&str]) -> (i32, String) {
        let argv: Vec<String> = std::iter::once("beatty")
            .chain(args.iter().copied())
            .map(String::from)
            .collect();
        run(&argv)
    }

    #[test]
    fn eval_emits_a_bfile() {
        let (code, text) = run_cmd(&["eval", "--gbs", "gbs:1,0,0@golden", "--n", "3"]);
        assert_eq!(code, 0);
        assert_eq!(text, "1 1\n2 3\n3 4\n");
    }

    #[test]
    fn pair_search_lists_the_golden_pairs() {
        let (code, text) = run_cmd(&["pair-search", "--alpha", "golden", "--depth", "10000"]);
        assert_eq!(code, 0);
        assert_eq!(text, "(1,0,0,1,1,0)\n(-1,3,-1,1,2,0)\n");
    }

    #[test]
    fn transform_prints_word_and_triple() {
        let (code, text) = run_cmd(&["transform", "--w", "001", "--n", "20"]);
        assert_eq!(code, 0);
        let mut lines = text.lines();
        let word = lines.next().unwrap();
        assert_eq!(word.len(), 20);
        assert!(word.starts_with("01201220120122012"));
        assert_eq!(lines.next().unwrap(), "(2,-1,2)");
    }

    #[test]
    fn pair_check_reports_the_collision() {
        let (code, text) = run_cmd(&[
            "pair-check",
            "--v",
            "1,4,0",
            "--w",
            "-1,4,0",
            "--alpha",
            "sqrt:8",
            "--depth",
            "1000",
        ]);
        assert_eq!(code, 1);
        assert!(text.contains("collisions: 6 (x2)"), "got: {text}");
        assert!(text.contains("missing: 1"), "got: {text}");
    }

    #[test]
    fn pair_check_accepts_the_corrected_pair() {
        let (code, text) = run_cmd(&[
            "pair-check",
            "--v",
            "1,4,0",
            "--w",
            "-1,4,-1",
            "--alpha",
            "sqrt:8",
            "--depth",
            "1000",
        ]);
        assert_eq!(code, 0);
        assert!(text.contains("exact partition"));
    }

    #[test]
    fn pair_check_handles_explicit_starts() {
        let (code, _) = run_cmd(&[
            "pair-check",
            "--v",
            "5,4,3#0",
            "--w",
            "5,-7,3#1",
            "--alpha",
            "golden",
            "--depth",
            "2000",
        ]);
        assert_eq!(code, 0);
    }

    #[test]
    fn triple_check_splits_and_verifies() {
        let (code, text) = run_cmd(&[
            "triple-check",
            "--v",
            "1,0,0",
            "--w",
            "1,1,0",
            "--depth",
            "1000",
        ]);
        assert_eq!(code, 0, "got: {text}");
        assert!(text.contains("components: gbs:1,1,-1@golden#1 gbs:2,1,0@golden#1"));
        assert!(text.contains("exact partition"));
    }

    #[test]
    fn triple_check_reports_the_lost_start_term() {
        // splitting a start-0 sequence drops its index-0 value from the cover
        let (code, text) = run_cmd(&[
            "triple-check",
            "--v",
            "5,4,3#0",
            "--w",
            "5,-7,3#1",
            "--depth",
            "1000",
        ]);
        assert_eq!(code, 1);
        assert!(text.contains("missing: 3"), "got: {text}");
    }

    #[test]
    fn pell_witness_for_five() {
        let (code, text) = run_cmd(&["pell", "--p", "5"]);
        assert_eq!(code, 0);
        assert!(text.contains("witness: x = 1, y = 11"), "got: {text}");
    }

    #[test]
    fn pell_without_witness_fails() {
        let (code, text) = run_cmd(&["pell", "--p", "3"]);
        assert_eq!(code, 1);
        assert!(text.contains("no witness"));
    }

    #[test]
    fn returns_verb_reports_the_structure() {
        let (code, text) = run_cmd(&["returns", "--w", "001"]);
        assert_eq!(code, 0);
        assert!(text.contains("r0 = 01"));
        assert!(text.contains("r1 = 00101"));
        assert!(text.contains("r2 = 001"));
        assert!(text.contains("gbs:2,1,0@golden#1"));
    }

    #[test]
    fn decompose_json_lists_components() {
        let (code, text) = run_cmd(&["decompose", "--w", "001", "--depth", "2000", "--format", "json"]);
        assert_eq!(code, 0);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["components"]["0"][0], "gbs:1,2,1@golden#0");
        assert_eq!(value["components"]["1"][0], "gbs:1,2,2@golden#0");
        assert_eq!(value["components"]["2"][0], "gbs:2,-1,2@golden#1");
    }

    #[test]
    fn decompose_diagnostic_reports_uncovered_positions() {
        let (code, text) = run_cmd(&[
            "decompose",
            "--w",
            "10100",
            "--depth",
            "2000",
            "--diagnostic",
        ]);
        assert_eq!(code, 1);
        assert!(text.contains("uncovered 0: 1"), "got: {text}");
    }

    #[test]
    fn decompose_rejects_small_prefix_violations() {
        let (code, text) = run_cmd(&["decompose", "--w", "10100", "--depth", "2000"]);
        assert_eq!(code, 1);
        assert!(text.contains("small-prefix"));
    }

    #[test]
    fn transform_rejects_overlapping_factors() {
        let (code, text) = run_cmd(&["transform", "--w", "010"]);
        assert_eq!(code, 1);
        assert!(text.contains("overlaps"));
    }

    #[test]
    fn fit_round_trips_and_rejects() {
        let (code, text) = run_cmd(&["fit", "--alpha", "golden", "--terms", "1,3,4,6,8"]);
        assert_eq!(code, 0);
        assert_eq!(text, "gbs:1,0,0@golden#1\n");

        let (code, text) = run_cmd(&["fit", "--alpha", "golden", "--terms", "1,3,4,6,9"]);
        assert_eq!(code, 1);
        assert!(text.contains("no fit"));
    }

    #[test]
    fn fixpoint_prints_the_fibonacci_word() {
        let (code, text) = run_cmd(&["fixpoint", "--morphism", "0>01;1>0", "--n", "13"]);
        assert_eq!(code, 0);
        assert_eq!(text, "0100101001001\n");
    }

    #[test]
    fn diff_word_prints_letters() {
        let (code, text) = run_cmd(&["diff-word", "--gbs", "gbs:2,-1,2@golden", "--n", "6"]);
        assert_eq!(code, 0);
        assert_eq!(text, "31331\n");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_cmd(&["no-such-verb"]).0, 2);
        assert_eq!(run_cmd(&["pair-check", "--v", "1,0,0"]).0, 2);
        assert_eq!(run_cmd(&["eval", "--gbs", "nonsense"]).0, 2);
        assert_eq!(
            run_cmd(&["pair-search", "--alpha", "golden", "--depth", "1"]).0,
            2
        );
        assert_eq!(
            run_cmd(&["pair-search", "--alpha", "sqrt:120", "--depth", "100"]).0,
            2
        );
        assert_eq!(run_cmd(&["returns", "--w", "11"]).0, 2);
        assert_eq!(
            run_cmd(&["eval", "--gbs", "gbs:1,0,0@golden", "--format", "xml"]).0,
            2
        );
    }

    #[test]
    fn help_exits_zero() {
        assert_eq!(run_cmd(&["--help"]).0, 0);
    }
}
