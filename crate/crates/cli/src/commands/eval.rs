use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use lexshift_core::metrics::{compare_lexicons, ConfusionMatrix};
use lexshift_core::Sentiment;

use crate::config::Config;
use crate::error::{contract, CliError, Result};
use crate::formats::{read_prediction_pairs, read_sentiment_map, read_word_list};
use crate::io_util::{atomic_write, ensure_dir, tsv};
use crate::manifest::ManifestBuilder;

/// Scores a gold/predicted pair file: confusion matrix, accuracy, and
/// per-class precision, recall and F-measure.
pub fn predictions(config: &Config, input: &Path, out_dir: &Path) -> Result<()> {
    let mut manifest = ManifestBuilder::new("eval-predictions");
    manifest.input(input);
    let (gold, predicted) = read_prediction_pairs(input)?;
    let matrix = ConfusionMatrix::from_pairs(&gold, &predicted).map_err(contract)?;

    ensure_dir(out_dir)?;
    let mut rows: Vec<String> = Sentiment::ALL
        .iter()
        .map(|&class| {
            let scores = matrix.class_metrics(class);
            format!(
                "{}\t{}\t{}\t{}\t{}",
                class.as_str(),
                scores.precision,
                scores.recall,
                scores.f_measure,
                scores.degenerate,
            )
        })
        .collect();
    rows.push(format!("accuracy\t{}\t\t\t", matrix.accuracy()));
    let body = tsv("class\tprecision\trecall\tf_measure\tdegenerate", rows);
    atomic_write(&out_dir.join("report.tsv"), &body)?;
    manifest.output("report.tsv");

    let mut text = String::from("confusion matrix (gold rows, predicted columns)\n");
    let _ = writeln!(text, "{:<10}{:>10}{:>10}{:>10}", "", "negative", "neutral", "positive");
    for gold_class in Sentiment::ALL {
        let _ = write!(text, "{:<10}", gold_class.as_str());
        for predicted_class in Sentiment::ALL {
            let _ = write!(text, "{:>10}", matrix.count(gold_class, predicted_class));
        }
        text.push('\n');
    }
    let correct: u64 = Sentiment::ALL.iter().map(|&c| matrix.count(c, c)).sum();
    let _ = writeln!(
        text,
        "\naccuracy: {:.4} ({correct} of {} correct)\n",
        matrix.accuracy(),
        matrix.total(),
    );
    let _ =
        writeln!(text, "{:<10}{:>10}{:>10}{:>10}", "class", "precision", "recall", "f-measure");
    let mut any_degenerate = false;
    for class in Sentiment::ALL {
        let scores = matrix.class_metrics(class);
        let marker = if scores.degenerate { " *" } else { "" };
        any_degenerate |= scores.degenerate;
        let _ = writeln!(
            text,
            "{:<10}{:>10.4}{:>10.4}{:>10.4}{marker}",
            class.as_str(),
            scores.precision,
            scores.recall,
            scores.f_measure,
        );
    }
    if any_degenerate {
        text.push_str("* degenerate: the class never occurs in gold or predictions\n");
    }
    atomic_write(&out_dir.join("report.txt"), &text)?;
    manifest.output("report.txt");

    manifest.write(out_dir, config)?;
    println!("scored {} predictions; accuracy {:.4}", matrix.total(), matrix.accuracy());
    Ok(())
}

fn parse_list_arg(raw: &str) -> Result<(String, PathBuf)> {
    match raw.split_once('=') {
        Some((name, path)) if !name.is_empty() && !path.is_empty() => {
            Ok((String::from(name), PathBuf::from(path)))
        }
        _ => Err(CliError::Config(format!("--list expects NAME=PATH, got `{raw}`"))),
    }
}

/// Measures word lists against a gold lexicon: how much of each list is
/// negative, neutral or positive under the gold labels.
pub fn lexicon(config: &Config, gold_path: &Path, list_args: &[String], out_dir: &Path) -> Result<()> {
    let mut manifest = ManifestBuilder::new("eval-lexicon");
    manifest.input(gold_path);
    let gold = read_sentiment_map(gold_path)?;

    if list_args.is_empty() {
        return Err(CliError::Config(String::from("at least one --list NAME=PATH is required")));
    }
    let mut lists: Vec<(String, BTreeSet<String>)> = Vec::with_capacity(list_args.len());
    for raw in list_args {
        let (name, path) = parse_list_arg(raw)?;
        manifest.input(&path);
        let words: BTreeSet<String> = read_word_list(&path)?.into_iter().collect();
        lists.push((name, words));
    }

    let comparison = compare_lexicons(&gold, &lists).map_err(contract)?;

    ensure_dir(out_dir)?;
    let body = tsv(
        "list\tsize\tnegative\tneutral\tpositive\tnegative_pct\tneutral_pct\tpositive_pct",
        comparison.rows.iter().map(|row| {
            format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                row.name,
                row.size,
                row.counts[0],
                row.counts[1],
                row.counts[2],
                row.percentages[0],
                row.percentages[1],
                row.percentages[2],
            )
        }),
    );
    atomic_write(&out_dir.join("report.tsv"), &body)?;
    manifest.output("report.tsv");

    let mut text = format!("gold lexicon: {} words\n\n", gold.len());
    for row in &comparison.rows {
        let _ = writeln!(
            text,
            "{}: {} words; {} negative ({}%), {} neutral ({}%), {} positive ({}%)",
            row.name,
            row.size,
            row.counts[0],
            row.percentages[0],
            row.counts[1],
            row.percentages[1],
            row.counts[2],
            row.percentages[2],
        );
    }
    atomic_write(&out_dir.join("report.txt"), &text)?;
    manifest.output("report.txt");

    manifest.write(out_dir, config)?;
    println!("compared {} lists against {} gold words", comparison.rows.len(), gold.len());
    Ok(())
}
