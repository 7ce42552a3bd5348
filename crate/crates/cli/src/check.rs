//! Grid self-check: oracle equivalence, closed forms, bounds, correspondence.

use std::collections::BTreeSet;
use std::fmt;

use mcomplexity_core::{
    correspondence_check, interval_complexity, interval_upper_bound, m_complexity,
    nontrivial_subwords, oracle_count_selections, oracle_enumerate, prefix_interval_complexity,
    single_gap_complexity, super_d_complexity, BigCount, GapSet, IntervalSpec, Word,
};

/// Oracle enumeration is exponential; lengths above this are skipped.
pub const ORACLE_MAX_LEN: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckLine {
    pub text: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub lines: Vec<CheckLine>,
}

impl Report {
    fn push(&mut self, pass: bool, text: String) {
        self.lines.push(CheckLine { text, pass });
    }

    pub fn failures(&self) -> usize {
        self.lines.iter().filter(|l| !l.pass).count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }
}

fn status(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            writeln!(f, "{}", line.text)?;
        }
        writeln!(f, "summary: {} checks, {} failed", self.lines.len(), self.failures())
    }
}

fn gap_sets(n: usize) -> impl Iterator<Item = GapSet> {
    (0u32..1 << (n - 1)).map(move |mask| {
        GapSet::new((0..n - 1).filter(|b| mask >> b & 1 == 1).map(|b| b + 1)).expect("positive gaps")
    })
}

fn oracle_agrees(n: usize, m: &GapSet) -> bool {
    let word = Word::positional(n).expect("n >= 1");
    let oracle = oracle_count_selections(&word, m);
    let matrix = m_complexity(n, m);
    let recurrence_ok = m.as_interval().is_none_or(|(d1, d2)| {
        interval_complexity(n, IntervalSpec::new(d1, d2).expect("d1 <= d2")) == matrix
    });
    let mut latin: BTreeSet<Vec<usize>> = nontrivial_subwords(&word, m, false).into_iter().collect();
    latin.extend(word.letters().iter().map(|&i| vec![i]));
    matrix == BigCount::from(oracle) && recurrence_ok && latin == oracle_enumerate(&word, m)
}

/// Runs every grid check for lengths up to `n_max`; correspondence uses `2 <= d <= d_max`.
pub fn run_checks(n_max: usize, d_max: usize) -> Report {
    let mut report = Report::default();

    for n in 1..=n_max.min(ORACLE_MAX_LEN) {
        let total = 1usize << (n - 1);
        let bad = gap_sets(n).filter(|m| !oracle_agrees(n, m)).count();
        report.push(
            bad == 0,
            format!("oracle(n={n}): {total} gap sets, matrix=recurrence=latin=oracle: {}", status(bad == 0)),
        );
    }

    for n in 1..=n_max {
        for d in 1..=n {
            let exact = m_complexity(n, &GapSet::range(d, n - 1).expect("positive"));
            let value = super_d_complexity(n, d).expect("d >= 1");
            let ok = value == exact;
            report.push(ok, format!("super-d({n},{d})={value} = exact {exact}: {}", status(ok)));

            let exact = m_complexity(n, &GapSet::new([d]).expect("positive"));
            let value = single_gap_complexity(n, d).expect("d >= 1");
            let ok = value == exact;
            report.push(ok, format!("single-gap({n},{d})={value} = exact {exact}: {}", status(ok)));
        }
        for d in (1..).take_while(|d| n + 2 >= 2 * d) {
            let exact = m_complexity(n, &GapSet::range(1, n - d).expect("positive"));
            let value = prefix_interval_complexity(n, d).expect("in range");
            let ok = value == exact;
            report.push(ok, format!("prefix({n},{d})={value} = exact {exact}: {}", status(ok)));
        }
        for d1 in 1..n {
            for d2 in d1..n {
                let exact = m_complexity(n, &GapSet::range(d1, d2).expect("positive"));
                let bound = interval_upper_bound(n, d1, d2).expect("d1 <= d2");
                let ok = bound >= exact;
                report.push(ok, format!("bound({n},{d1},{d2})={bound} ≥ exact {exact}: {}", status(ok)));
            }
        }
    }

    for n in 1..=n_max {
        for d in 2..=d_max {
            let c = correspondence_check(n, d).expect("d >= 2");
            report.push(
                c.holds(),
                format!("correspondence({n},{d}): {}={} {}", c.one_d, c.super_d_nontrivial, status(c.holds())),
            );
        }
    }
    report
}
