//! Plain-text rendering.

use std::io::{self, Write};

use nsring_core::{ClassificationReport, ReportDocument, SweepReport};

fn list(v: &[i64]) -> String {
    let inner: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

fn gens(v: &[i64]) -> String {
    let inner: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("<{}>", inner.join(","))
}

pub fn write_report(out: &mut impl Write, doc: &ReportDocument) -> io::Result<()> {
    let r = &doc.report;
    let rows: Vec<(&str, String)> = vec![
        ("semigroup", gens(&r.generators)),
        ("multiplicity", r.multiplicity.to_string()),
        ("embdim", r.embdim.to_string()),
        ("codim", r.codim.to_string()),
        ("type", r.cm_type.to_string()),
        ("frobenius", r.frobenius.to_string()),
        ("genus", r.genus.to_string()),
        ("conductor", r.conductor.to_string()),
        ("pf", list(&r.pseudo_frobenius)),
        ("gorenstein", r.gorenstein.to_string()),
        ("pseudo_symmetric", r.pseudo_symmetric.to_string()),
        ("almost_symmetric", r.almost_symmetric.to_string()),
        ("nearly_gorenstein", r.nearly_gorenstein.to_string()),
        ("min_multiplicity", r.min_multiplicity.to_string()),
        ("trace", list(&r.trace_generators)),
        ("teter", r.teter.to_string()),
    ];
    for (k, v) in rows {
        writeln!(out, "{k:<18} {v}")?;
    }
    if let Some(note) = &r.teter_note {
        writeln!(out, "{:<18} {note}", "note")?;
    }
    if let Some(c) = &r.certificate {
        writeln!(out, "{:<18} {}", "gamma", c.gamma)?;
        writeln!(out, "{:<18} {}", "delta", c.delta)?;
        if let Some(s) = c.omitted {
            writeln!(out, "{:<18} a_{s}", "omitted")?;
        }
    }
    if let Some(us) = doc.timing_us {
        writeln!(out, "{:<18} {us} us", "time")?;
    }
    Ok(())
}

pub fn write_line(out: &mut impl Write, r: &ClassificationReport) -> io::Result<()> {
    let mut flags = Vec::new();
    for (on, name) in [
        (r.symmetric, "symmetric"),
        (r.pseudo_symmetric, "pseudo-symmetric"),
        (r.almost_symmetric, "almost-symmetric"),
        (r.nearly_gorenstein, "nearly-gorenstein"),
        (r.min_multiplicity, "min-multiplicity"),
        (r.teter, "teter"),
    ] {
        if on {
            flags.push(name);
        }
    }
    writeln!(
        out,
        "{}\t{}\tF={}\ttype={}\t{}",
        r.genus,
        gens(&r.generators),
        r.frobenius,
        r.cm_type,
        flags.join(",")
    )
}

pub fn write_sweep(out: &mut impl Write, rep: &SweepReport) -> io::Result<()> {
    writeln!(
        out,
        "semigroups up to genus {}: {}",
        rep.g_max, rep.semigroups
    )?;
    writeln!(
        out,
        "{:>5} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8}",
        "genus", "total", "sym", "psym", "asym", "ng", "minmult", "teter"
    )?;
    for (g, c) in rep.per_genus.iter().enumerate() {
        writeln!(
            out,
            "{:>5} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8}",
            g,
            c.total,
            c.symmetric,
            c.pseudo_symmetric,
            c.almost_symmetric,
            c.nearly_gorenstein,
            c.min_multiplicity,
            c.teter
        )?;
    }
    writeln!(out)?;
    writeln!(
        out,
        "{:<36} {:>10} {:>10}",
        "check", "evaluated", "violations"
    )?;
    for (check, t) in &rep.checks {
        writeln!(
            out,
            "{:<36} {:>10} {:>10}",
            check.name(),
            t.evaluated,
            t.violations
        )?;
    }
    let verdict = if rep.is_clean() { "PASS" } else { "FAIL" };
    writeln!(out, "{verdict}: {} violations", rep.total_violations())
}
