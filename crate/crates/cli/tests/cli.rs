use std::path::PathBuf;
use std::process::Command;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn fdgame(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_fdgame")).args(args).output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn data(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name].iter().collect();
    path.to_str().unwrap().to_string()
}

fn scratch(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn ne_lists_equilibria() {
    let r = fdgame(&["ne", &data("coordination.game")]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "a=a1 b=b1\na=a2 b=b2\ntotal: 2\n"));
    let r = fdgame(&["ne", &data("parity.game")]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.ends_with("total: 4\n"));

    let dir = tempfile::tempdir().unwrap();
    let one = scratch(&dir, "one.game", "players a\nstrategies a only\n");
    let r = fdgame(&["ne", &one]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "a=only\ntotal: 1\n"));
}

#[test]
fn ne_rejects_non_local_payoffs() {
    let dir = tempfile::tempdir().unwrap();
    let bad = scratch(
        &dir,
        "bad.game",
        "players a b c\nedge a b\nedge b c\nstrategies a x y\nstrategies b x y\nstrategies c x y\npayoff a a=x c=x 1\n",
    );
    let r = fdgame(&["ne", &bad]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("locality error at line 7"), "{}", r.stderr);
}

#[test]
fn check_reports_holds_or_fails() {
    let rps = data("gamma2_rps.game");
    let r = fdgame(&["check", &rps, "a |> d"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "holds\n"));
    let r = fdgame(&["check", &rps, "b,c |> d"]);
    assert_eq!((r.code, r.stdout.as_str()), (1, "fails\n"));
    let r = fdgame(&["check", &rps, "false"]);
    assert_eq!((r.code, r.stdout.as_str()), (1, "fails\n"));
    let r = fdgame(&["check", &rps, "a |> z"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("scope error"));
}

#[test]
fn prove_emits_derivations() {
    let r = fdgame(&["prove", &data("gamma1.graph"), "--assume", "a |> d", "b,c |> d"]);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.stdout,
        "1. a |> d [Hypothesis]\n2. b,c |> d [Contiguity 1 cut={a,b}|{c,d} A={a}]\n"
    );
    let r = fdgame(&["prove", &data("gamma3.graph"), "--assume", "a |> c", "b |> c"]);
    assert_eq!((r.code, r.stdout.as_str()), (1, "not derivable\n"));
    let r = fdgame(&["prove", &data("gamma4.graph"), "a,b |> a"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "1. a,b |> a [Reflexivity]\n"));
    let r = fdgame(&[
        "prove",
        &data("gamma5.graph"),
        "--assume",
        "a |> b",
        "--assume",
        "b |> c",
        "--assume",
        "c |> a",
        "d,e,f |> a,b,c",
    ]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout.matches("[Contiguity").count(), 3);
}

#[test]
fn prove_respects_the_size_guard() {
    let dir = tempfile::tempdir().unwrap();
    let names: Vec<String> = (0..13).map(|i| format!("p{i}")).collect();
    let big = scratch(&dir, "big.graph", &format!("players {}\n", names.join(" ")));
    let r = fdgame(&["prove", &big, "p0 |> p0"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("at most 12"), "{}", r.stderr);
}

#[test]
fn refute_prints_a_game_document() {
    let r = fdgame(&["refute", &data("gamma2.graph"), "a |> d -> b,c |> d", "--max-strategies", "3"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("players a b c d"));
    let dir = tempfile::tempdir().unwrap();
    let game = scratch(&dir, "found.game", &r.stdout);
    let check = fdgame(&["check", &game, "a |> d -> b,c |> d"]);
    assert_eq!((check.code, check.stdout.as_str()), (1, "fails\n"));

    let r = fdgame(&["refute", &data("gamma1.graph"), "a |> a"]);
    assert_eq!(r.code, 1);
    assert_eq!(r.stdout, "no counterexample within bounds (10000 games examined)\n");

    let single = scratch(&dir, "single.graph", "players a\n");
    for mode in ["random", "systematic"] {
        let r = fdgame(&["refute", &single, "{} |> a", "--max-strategies", "2", "--mode", mode]);
        assert_eq!(r.code, 0, "{mode}");
        assert!(r.stdout.contains("strategies a a1 a2"), "{}", r.stdout);
    }
}

#[test]
fn refute_is_deterministic_per_seed() {
    let args = ["refute", &data("gamma2.graph"), "a |> d -> b,c |> d", "--max-strategies", "3", "--seed", "7"];
    let first = fdgame(&args);
    assert_eq!(first.code, 0);
    assert_eq!(fdgame(&args).stdout, first.stdout);
}

#[test]
fn refute_rejects_bad_bounds() {
    let g = data("gamma1.graph");
    assert_eq!(fdgame(&["refute", &g, "a |> b", "--values", "0,x"]).code, 2);
    assert_eq!(fdgame(&["refute", &g, "a |> b", "--max-strategies", "0"]).code, 2);
    assert_eq!(fdgame(&["refute", &g, "a |> b", "--mode", "clever"]).code, 2);
    assert_eq!(fdgame(&["refute", &g, "a |>"]).code, 2);
}

#[test]
fn validate_warns_on_partial_tables() {
    let r = fdgame(&["validate", &data("coordination.game")]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "valid (0 warning(s))\n"));
    let dir = tempfile::tempdir().unwrap();
    let partial = scratch(&dir, "p.game", "players a b\nedge a b\nstrategies a x y\nstrategies b x\npayoff a a=x b=x 1\n");
    let r = fdgame(&["validate", &partial]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("warning: payoff table of `a` lists 1 of 2 entries"));
}

#[test]
fn fuzz_soundness_reports() {
    let r = fdgame(&["fuzz-soundness", &data("gamma1.graph"), "--assume", "a |> d", "--samples", "1000", "--seed", "42"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("games tested: 1000\n"));
    assert!(r.stdout.ends_with("violations: 0\n"));
}

#[test]
fn prove_check_verifies_files() {
    let dir = tempfile::tempdir().unwrap();
    let good = scratch(&dir, "good.txt", "1. a |> d [Hypothesis]\n2. b,c |> d [Contiguity 1 cut={a,b}|{c,d} A={a}]\n");
    let r = fdgame(&["prove-check", &data("gamma1.graph"), &good]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "hypothesis: a |> d\nvalid: b,c |> d\n"));
    let r = fdgame(&["prove-check", &data("gamma1.graph"), &good, "--assume", "a |> c"]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("step 1"));
    let r = fdgame(&["prove-check", &data("gamma1.graph"), &good, "--goal", "b |> d"]);
    assert_eq!(r.code, 1);

    let tampered = scratch(&dir, "bad.txt", "1. a |> d [Hypothesis]\n2. b,c |> d [Contiguity 1 cut={b,c,d}|{a} A={a}]\n");
    let r = fdgame(&["prove-check", &data("gamma1.graph"), &tampered]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.starts_with("invalid: step 2: A ⊄ U"), "{}", r.stdout);

    let garbled = scratch(&dir, "garbled.txt", "1. a |> d [Guess]\n");
    assert_eq!(fdgame(&["prove-check", &data("gamma1.graph"), &garbled]).code, 2);
}

#[test]
fn builtins_round_trip_through_files() {
    let r = fdgame(&["builtin", "list"]);
    assert_eq!(r.code, 0);
    let dir = tempfile::tempdir().unwrap();
    let text = fdgame(&["builtin", "gamma1_mean_mod(5)"]).stdout;
    let path = scratch(&dir, "mean.game", &text);
    assert_eq!(fdgame(&["check", &path, "a,b |> c,d"]).code, 0);
    assert_eq!(fdgame(&["check", &path, "a |> b"]).code, 1);
    assert_eq!(fdgame(&["builtin", "gamma1_mean_mod(4)"]).code, 2);
    assert_eq!(fdgame(&["builtin", "nonsense"]).code, 2);
    for name in ["coordination", "table2", "parity", "consensus", "gamma2_rps"] {
        assert_eq!(std::fs::read_to_string(data(&format!("{name}.game"))).unwrap(), fdgame(&["builtin", name]).stdout);
    }
}

#[test]
fn missing_files_and_usage_errors_exit_2() {
    assert_eq!(fdgame(&["ne", "/nonexistent/file.game"]).code, 2);
    assert_eq!(fdgame(&["frobnicate"]).code, 2);
    assert_eq!(fdgame(&["check", &data("coordination.game")]).code, 2);
}
