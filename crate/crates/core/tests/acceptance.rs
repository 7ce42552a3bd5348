//! Acceptance suite. Every check is exact (tolerance 0); prints one line per criterion.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use mcomplexity_core::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn big(v: u64) -> BigCount {
    BigCount::from(v)
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

fn gaps(items: &[usize]) -> GapSet {
    GapSet::new(items.iter().copied()).unwrap()
}

fn range(lo: usize, hi: usize) -> GapSet {
    GapSet::range(lo, hi).unwrap()
}

fn strings(words: impl IntoIterator<Item = Vec<char>>) -> BTreeSet<String> {
    words.into_iter().map(|w| w.into_iter().collect()).collect()
}

fn listed(words: &[&str]) -> BTreeSet<String> {
    words.iter().map(|s| s.to_string()).collect()
}

fn golden_values() -> Check {
    expect_eq("K(6,{2..5})", m_complexity(6, &range(2, 5)), big(20))?;
    expect_eq("K(7,{2..6}) matrix", m_complexity(7, &range(2, 6)), big(33))?;
    expect_eq("K(7,{2..6}) closed form", super_d_complexity(7, 2).unwrap(), big(33))?;
    expect_eq("K(7,{4,5,6}) matrix", m_complexity(7, &range(4, 6)), big(13))?;
    expect_eq("K(7,{4,5,6}) closed form", super_d_complexity(7, 4).unwrap(), big(13))?;
    expect_eq("K(7,{2,3})", m_complexity(7, &range(2, 3)), big(25))?;
    expect_eq("bound(7,2,3)", interval_upper_bound(7, 2, 3).unwrap(), big(27))
}

fn table_two_four() -> Check {
    let a_row: Vec<BigCount> =
        [1u64, 1, 2, 3, 5, 7, 11, 16, 24, 35, 52, 76, 112].into_iter().map(big).collect();
    let k_row: Vec<BigCount> =
        [1u64, 2, 4, 7, 12, 19, 30, 46, 70, 105, 157, 233, 345].into_iter().map(big).collect();
    let spec = IntervalSpec::new(2, 4).unwrap();
    expect_eq("a_n full recurrence", tail_counts(13, spec).values().to_vec(), a_row.clone())?;
    expect_eq("a_n simplified", tail_counts_simplified(13, spec).values().to_vec(), a_row.clone())?;
    let k_rec: Vec<BigCount> = (1..=13).map(|n| interval_complexity(n, spec)).collect();
    expect_eq("K_n recurrence", k_rec, k_row.clone())?;
    let a = series_a(spec, 13).unwrap();
    let k = series_k(spec, 13).unwrap();
    expect_eq("A(z)[0]", a.get(0).clone(), big(0))?;
    expect_eq("K(z)[0]", k.get(0).clone(), big(0))?;
    expect_eq("A(z) coefficients", a.as_slice()[1..].to_vec(), a_row)?;
    expect_eq("K(z) coefficients", k.as_slice()[1..].to_vec(), k_row)
}

fn enumeration_goldens() -> Check {
    let abcd = parse_word("abcd").unwrap();
    let m = gaps(&[1, 3]);
    let want = listed(&["a", "ab", "abc", "abcd", "ad", "b", "bc", "bcd", "c", "cd", "d"]);
    expect_eq("abcd oracle", strings(oracle_enumerate(&abcd, &m)), want.clone())?;
    let mut latin = strings(nontrivial_subwords(&abcd, &m, false));
    latin.extend(listed(&["a", "b", "c", "d"]));
    expect_eq("abcd latin", latin, want)?;

    let abcdef = parse_word("abcdef").unwrap();
    let want = listed(&[
        "a", "ac", "ad", "ae", "af", "ace", "acf", "adf", "b", "bd", "be", "bf", "bdf", "c", "ce",
        "cf", "d", "df", "e", "f",
    ]);
    expect_eq("abcdef count", want.len(), 20)?;
    expect_eq("abcdef oracle", strings(oracle_enumerate(&abcdef, &range(2, 5))), want)?;

    let abcdefgh = parse_word("abcdefgh").unwrap();
    let want = listed(&[
        "ad", "ae", "af", "ag", "adg", "ah", "adh", "aeh", "be", "bf", "bg", "bh", "beh", "cf",
        "cg", "ch", "dg", "dh", "eh",
    ]);
    let got = nontrivial_subwords(&abcdefgh, &range(3, 7), false);
    expect_eq("abcdefgh count", got.len(), 19)?;
    expect_eq("abcdefgh latin", strings(got), want)?;

    let aab = parse_word("aabbbaaa").unwrap();
    let got: Vec<String> =
        nontrivial_subwords(&aab, &range(3, 7), true).into_iter().map(|w| w.into_iter().collect()).collect();
    expect_eq("aabbbaaa dedup", got, vec!["aa".into(), "ab".into(), "aba".into(), "ba".into()])
}

fn cell_text(m: &WordSetMatrix<char>) -> Vec<Vec<Vec<String>>> {
    (0..m.order())
        .map(|i| (0..m.order()).map(|j| m.cell(i, j).iter().map(|w| w.iter().collect()).collect()).collect())
        .collect()
}

fn worked_matrices() -> Check {
    let a = build_adjacency(6, &range(2, 5));
    let want_a = CountMatrix::from_rows(&[
        [0, 0, 1, 1, 1, 1],
        [0, 0, 0, 1, 1, 1],
        [0, 0, 0, 0, 1, 1],
        [0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ]);
    expect_eq("A", &a, &want_a)?;
    let want_w = CountMatrix::from_rows(&[
        [0, 0, 1, 1, 2, 3],
        [0, 0, 0, 1, 1, 2],
        [0, 0, 0, 0, 1, 1],
        [0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ]);
    expect_eq("W", &warshall_paths(&a), &want_w)?;
    let want_r = CountMatrix::from_rows(&[
        [1, 0, 1, 1, 2, 3],
        [0, 1, 0, 1, 1, 2],
        [0, 0, 1, 0, 1, 1],
        [0, 0, 0, 1, 0, 1],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 1],
    ]);
    let r = reachability(&a);
    expect_eq("R", &r, &want_r)?;
    expect_eq("sum R", r.sum(), big(20))?;

    let word = parse_word("abcdefgh").unwrap();
    let init = init_latin(&word, &range(3, 7));
    let row = |cells: &[&[&str]]| -> Vec<Vec<String>> {
        cells.iter().map(|c| c.iter().map(|s| s.to_string()).collect()).collect()
    };
    let e: &[&str] = &[];
    let empty_row = row(&[e; 8]);
    let want_init = vec![
        row(&[e, e, e, &["ad"], &["ae"], &["af"], &["ag"], &["ah"]]),
        row(&[e, e, e, e, &["be"], &["bf"], &["bg"], &["bh"]]),
        row(&[e, e, e, e, e, &["cf"], &["cg"], &["ch"]]),
        row(&[e, e, e, e, e, e, &["dg"], &["dh"]]),
        row(&[e, e, e, e, e, e, e, &["eh"]]),
        empty_row.clone(),
        empty_row.clone(),
        empty_row.clone(),
    ];
    expect_eq("initial Latin matrix", cell_text(&init), want_init)?;
    // cells are kept lexicographically ordered
    let want_final = vec![
        row(&[e, e, e, &["ad"], &["ae"], &["af"], &["adg", "ag"], &["adh", "aeh", "ah"]]),
        row(&[e, e, e, e, &["be"], &["bf"], &["bg"], &["beh", "bh"]]),
        row(&[e, e, e, e, e, &["cf"], &["cg"], &["ch"]]),
        row(&[e, e, e, e, e, e, &["dg"], &["dh"]]),
        row(&[e, e, e, e, e, e, e, &["eh"]]),
        empty_row.clone(),
        empty_row.clone(),
        empty_row,
    ];
    expect_eq("final Latin matrix", cell_text(&warshall_latin(&init)), want_final)
}

fn mask_to_gaps(mask: u32) -> GapSet {
    GapSet::new((0..32).filter(|b| mask >> b & 1 == 1).map(|b| b as usize + 1)).unwrap()
}

fn equivalence_case(n: usize, m: &GapSet) -> Check {
    let word = Word::alphabetic(n).unwrap();
    let oracle = oracle_count_selections(&word, m);
    let matrix = m_complexity(n, m);
    expect_eq(&format!("matrix vs oracle n={n} M={m}"), matrix.clone(), big(oracle))?;
    if let Some((d1, d2)) = m.as_interval() {
        let rec = interval_complexity(n, IntervalSpec::new(d1, d2).unwrap());
        expect_eq(&format!("recurrence vs matrix n={n} M={m}"), rec, matrix)?;
    }
    let mut latin: BTreeSet<Vec<char>> = nontrivial_subwords(&word, m, false).into_iter().collect();
    latin.extend(word.letters().iter().map(|c| vec![*c]));
    expect_eq(&format!("latin vs oracle enumeration n={n} M={m}"), latin, oracle_enumerate(&word, m))
}

fn oracle_equivalence() -> Check {
    let mut cases = 0usize;
    for n in 1..=8 {
        for mask in 0u32..1 << (n - 1) {
            equivalence_case(n, &mask_to_gaps(mask))?;
            cases += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0d1e);
    for n in [9usize, 10] {
        for _ in 0..200 {
            let mask = rng.gen_range(0u32..1 << (n - 1));
            equivalence_case(n, &mask_to_gaps(mask))?;
            cases += 1;
        }
    }
    expect_eq("case count", cases, 255 + 400)
}

fn closed_form_grids() -> Check {
    for n in 1..=20 {
        for d in 1..=n {
            let exact = m_complexity(n, &range(d, n - 1));
            expect_eq(&format!("super-d n={n} d={d}"), super_d_complexity(n, d).unwrap(), exact)?;
            let exact = m_complexity(n, &gaps(&[d]));
            expect_eq(&format!("single-gap n={n} d={d}"), single_gap_complexity(n, d).unwrap(), exact)?;
        }
        for d in (1..).take_while(|d| n + 2 >= 2 * d) {
            let exact = m_complexity(n, &range(1, n - d));
            expect_eq(&format!("prefix n={n} d={d}"), prefix_interval_complexity(n, d).unwrap(), exact)?;
        }
    }
    for n in 2..=14 {
        for d1 in 1..n {
            for d2 in d1..n {
                let exact = m_complexity(n, &range(d1, d2));
                let bound = interval_upper_bound(n, d1, d2).unwrap();
                if bound < exact {
                    return Err(format!("bound({n},{d1},{d2})={bound} < exact {exact}"));
                }
            }
        }
    }
    Ok(())
}

fn correspondence() -> Check {
    for n in 1..=15 {
        for d in 2..=6 {
            let c = correspondence_check(n, d).map_err(|e| e.to_string())?;
            if !c.holds() {
                return Err(format!("n={n} d={d}: {} != {}", c.one_d, c.super_d_nontrivial));
            }
        }
    }
    let c = correspondence_check(5, 3).unwrap();
    expect_eq("n=5 d=3", (c.one_d, c.super_d_nontrivial), (big(19), big(19)))
}

fn bigint_integrity() -> Check {
    let want = (BigCount::from(1u32) << 70u32) - 1u32;
    let formula = prefix_interval_complexity(70, 1).unwrap();
    let matrix = m_complexity(70, &range(1, 69));
    expect_eq("prefix formula", formula.clone(), want.clone())?;
    expect_eq("matrix", matrix, want)?;
    if formula <= BigCount::from(u64::MAX) {
        return Err("value does not exceed 64 bits".into());
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("AC1 golden complexities and bound", golden_values),
        ("AC2 (2,4) table by recurrence and generating function", table_two_four),
        ("AC3 enumeration goldens", enumeration_goldens),
        ("AC4 worked count and Latin matrices", worked_matrices),
        ("AC5 oracle equivalence, n <= 10", oracle_equivalence),
        ("AC6 closed forms vs matrix grids", closed_form_grids),
        ("AC7 {1,d} correspondence, n <= 15, 2 <= d <= 6", correspondence),
        ("AC8 bigint integrity K(70,{1..69})", bigint_integrity),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("PASS  {name} ({:.2?})", start.elapsed()),
            Err(reason) => {
                failed += 1;
                println!("FAIL  {name}: {reason}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
