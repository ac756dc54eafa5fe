use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use maxclass::campaign::{self, Campaign, CheckSelection, Format};
use maxclass::error::{Error, Result};
use maxclass::group::{Family, GroupSpec};
use maxclass::table::{full_unit_group, generate_subgroup, GroupTable, DEFAULT_CLOSURE_CAP};
use maxclass::units::{standard_a, Unit};
use maxclass::wreath;

#[derive(Parser)]
#[command(name = "maxclass", version, about = "Unit groups of GF(2)[G] for 2-groups of maximal class")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    D,
    S,
    Q,
    All,
}

impl FamilyArg {
    fn families(self) -> Vec<Family> {
        match self {
            FamilyArg::D => vec![Family::Dihedral],
            FamilyArg::S => vec![Family::Semidihedral],
            FamilyArg::Q => vec![Family::Quaternion],
            FamilyArg::All => Family::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    /// F modulo <A^N> or <b^2, A^N>
    Section,
    /// the parent group F
    Parent,
    /// C2 wr C_(2^(n-2))
    Wreath,
    /// <b, b^A, ..., b^(A^(N-1))>
    Towers,
    /// all normalized units (n = 3 only)
    Units,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification checks over a grid of groups
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        family: FamilyArg,
        #[arg(long, default_value_t = 3)]
        n_min: u32,
        #[arg(long, default_value_t = 5)]
        n_max: u32,
        /// `all` or a comma-separated list of check ids
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Describe a check
    Explain { check_id: String },
    /// List the available checks
    Checks,
    /// Export a group as a multiplication table
    Table {
        #[arg(long, value_enum, default_value = "q")]
        family: FamilyArg,
        #[arg(long, default_value_t = 4)]
        n: u32,
        #[arg(long, value_enum, default_value = "section")]
        kind: TableKind,
        #[arg(long)]
        export: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Print Lie nilpotency indices as JSON
    Indices {
        #[arg(long, value_enum, default_value = "all")]
        family: FamilyArg,
        #[arg(long, default_value_t = 3)]
        n_min: u32,
        #[arg(long, default_value_t = 8)]
        n_max: u32,
    },
    /// Write a section certificate as JSON
    Certify {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn single_family(f: FamilyArg) -> Result<Family> {
    match f.families().as_slice() {
        [one] => Ok(*one),
        _ => Err(Error::InvalidParameter("choose one family: d, s or q".into())),
    }
}

fn write_or_print(path: Option<&PathBuf>, body: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, body).map_err(|source| Error::Io {
            path: p.clone(),
            source,
        }),
        None => {
            println!("{body}");
            Ok(())
        }
    }
}

fn table_for(spec: GroupSpec, kind: TableKind) -> Result<GroupTable> {
    match kind {
        TableKind::Section => Ok(wreath::construct_section(spec)?.table),
        TableKind::Parent => generate_subgroup(&wreath::section_generators(spec), DEFAULT_CLOSURE_CAP)?.to_table(),
        TableKind::Wreath => wreath::build_wreath(spec.n() - 2),
        TableKind::Towers => {
            let a = standard_a(spec);
            let towers: Vec<Unit> = (0..spec.derived_order())
                .map(|k| Unit::b(spec).conjugate_by(&a.pow(k as u64)))
                .collect();
            generate_subgroup(&towers, DEFAULT_CLOSURE_CAP)?.to_table()
        }
        TableKind::Units => {
            let units = full_unit_group(spec, 1 << 8)?;
            let table = units.to_table()?;
            let gens = table.minimal_generators();
            GroupTable::from_parts(table.labels().to_vec(), gens, table.raw_table().to_vec())
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Verify {
            family,
            n_min,
            n_max,
            checks,
            seed,
            out,
            format,
        } => {
            let campaign = Campaign {
                families: family.families(),
                n_min,
                n_max,
                checks: checks.parse::<CheckSelection>()?,
                seed,
            };
            let report = campaign::run_campaign(&campaign)?;
            let format = match format {
                FormatArg::Json => Format::Json,
                FormatArg::Text => Format::Text,
            };
            match &out {
                Some(path) => campaign::write_report(&report, path, format)?,
                None => match format {
                    Format::Json => println!("{}", serde_json::to_string_pretty(&report.to_file())?),
                    Format::Text => print!("{}", report.to_text()),
                },
            }
            for e in report.failures() {
                eprintln!("FAIL {} {} n={}", e.check_id, e.family, e.n);
            }
            eprintln!(
                "{} entries, {} failed",
                report.entries.len(),
                report.failures().count()
            );
            Ok(report.all_passed())
        }
        Command::Explain { check_id } => {
            print!("{}", campaign::explain(&check_id)?);
            Ok(true)
        }
        Command::Checks => {
            for c in campaign::registry() {
                println!("{:<26} {}", c.id, c.title);
            }
            Ok(true)
        }
        Command::Table {
            family,
            n,
            kind,
            export,
            format,
        } => {
            let spec = GroupSpec::new(single_family(family)?, n)?;
            let table = table_for(spec, kind)?;
            let body = match format {
                FormatArg::Json => serde_json::to_string(&table.to_json())?,
                FormatArg::Text => table.to_text(),
            };
            write_or_print(Some(&export), &body)?;
            eprintln!("wrote {} elements to {}", table.order(), export.display());
            Ok(true)
        }
        Command::Indices {
            family,
            n_min,
            n_max,
        } => {
            let rows = campaign::index_table(&family.families(), n_min, n_max)?;
            println!("{}", serde_json::to_string_pretty(&rows)?);
            Ok(true)
        }
        Command::Certify { family, n, out } => {
            let spec = GroupSpec::new(single_family(family)?, n)?;
            let cert = wreath::certify_section(spec)?;
            write_or_print(out.as_ref(), &serde_json::to_string_pretty(&cert)?)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
