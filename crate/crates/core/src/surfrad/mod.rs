//! SURFRAD daily-file ingestion: parsing, merging, QC summaries, and the
//! canonical per-station-year CSV format.

mod canonical;
mod fetch;
mod parse;

pub use canonical::{read_canonical_csv, write_canonical_csv, CANONICAL_VERSION};
pub use fetch::{archive_urls, DayFileRef};
pub use parse::{parse_daily_file, ParsedDay, RowError};

use crate::error::{Error, Result};
use crate::stations::StationMeta;
use chrono::{DateTime, Utc};

/// The twenty measured channels of a SURFRAD record, in canonical order.
///
/// The order matches the column layout of the daily files (value/QC pairs
/// following the time and zenith fields).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(usize)]
pub enum Channel {
    DwSolar = 0,
    UwSolar,
    DirectN,
    Diffuse,
    DwIr,
    DwCasetemp,
    DwDometemp,
    UwIr,
    UwCasetemp,
    UwDometemp,
    Uvb,
    Par,
    Netsolar,
    Netir,
    Netrad,
    AirTemp10m,
    Rh,
    Windspd,
    Winddir,
    Pressure,
}

pub const NUM_CHANNELS: usize = 20;

impl Channel {
    pub const ALL: [Channel; NUM_CHANNELS] = [
        Channel::DwSolar,
        Channel::UwSolar,
        Channel::DirectN,
        Channel::Diffuse,
        Channel::DwIr,
        Channel::DwCasetemp,
        Channel::DwDometemp,
        Channel::UwIr,
        Channel::UwCasetemp,
        Channel::UwDometemp,
        Channel::Uvb,
        Channel::Par,
        Channel::Netsolar,
        Channel::Netir,
        Channel::Netrad,
        Channel::AirTemp10m,
        Channel::Rh,
        Channel::Windspd,
        Channel::Winddir,
        Channel::Pressure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Channel::DwSolar => "dw_solar",
            Channel::UwSolar => "uw_solar",
            Channel::DirectN => "direct_n",
            Channel::Diffuse => "diffuse",
            Channel::DwIr => "dw_ir",
            Channel::DwCasetemp => "dw_casetemp",
            Channel::DwDometemp => "dw_dometemp",
            Channel::UwIr => "uw_ir",
            Channel::UwCasetemp => "uw_casetemp",
            Channel::UwDometemp => "uw_dometemp",
            Channel::Uvb => "uvb",
            Channel::Par => "par",
            Channel::Netsolar => "netsolar",
            Channel::Netir => "netir",
            Channel::Netrad => "netrad",
            Channel::AirTemp10m => "air_temp_10m",
            Channel::Rh => "rh",
            Channel::Windspd => "windspd",
            Channel::Winddir => "winddir",
            Channel::Pressure => "pressure",
        }
    }

    pub fn unit(self) -> &'static str {
        match self {
            Channel::DwSolar
            | Channel::UwSolar
            | Channel::DirectN
            | Channel::Diffuse
            | Channel::DwIr
            | Channel::UwIr
            | Channel::Par
            | Channel::Netsolar
            | Channel::Netir
            | Channel::Netrad => "W/m^2",
            Channel::DwCasetemp | Channel::DwDometemp | Channel::UwCasetemp | Channel::UwDometemp => "K",
            Channel::Uvb => "mW/m^2",
            Channel::AirTemp10m => "degC",
            Channel::Rh => "%",
            Channel::Windspd => "m/s",
            Channel::Winddir => "deg",
            Channel::Pressure => "mb",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Channel> {
        Channel::ALL.get(i).copied()
    }
}

/// One measured value with its upstream QC flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelSample {
    /// Stored value; 0.0 when `missing`.
    pub value: f64,
    /// Quality-control flag from the source file (0 = passed).
    pub qc: i32,
    pub missing: bool,
}

impl ChannelSample {
    pub const MISSING: ChannelSample = ChannelSample {
        value: 0.0,
        qc: 0,
        missing: true,
    };

    /// The value, if present.
    pub fn get(&self) -> Option<f64> {
        if self.missing {
            None
        } else {
            Some(self.value)
        }
    }
}

/// One timestamped SURFRAD measurement row.
#[derive(Debug, Clone, PartialEq)]
pub struct ObservationRecord {
    /// UTC instant, 1-minute resolution.
    pub timestamp: DateTime<Utc>,
    /// Solar zenith angle reported by the station, degrees [0, 180].
    pub zenith: f64,
    /// The twenty channels, indexed by [`Channel`].
    pub channels: [ChannelSample; NUM_CHANNELS],
    /// Downwelling solar as read from the file, before clamping or
    /// missing-value substitution. Kept for audit.
    pub dw_solar_raw: f64,
}

impl ObservationRecord {
    pub fn channel(&self, c: Channel) -> ChannelSample {
        self.channels[c.index()]
    }

    /// Downwelling global solar, clamped at zero. `None` when missing.
    pub fn dw_solar(&self) -> Option<f64> {
        self.channel(Channel::DwSolar).get()
    }
}

/// Time-ordered observations for one station.
#[derive(Debug, Clone, PartialEq)]
pub struct ObservationSeries {
    pub station: StationMeta,
    pub records: Vec<ObservationRecord>,
}

impl ObservationSeries {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
}

/// Merge parsed day files into one strictly-increasing series.
///
/// Records are concatenated, sorted by timestamp, and deduplicated keeping the
/// first occurrence. Gaps are left as-is; imputation is a dataset-stage
/// decision.
pub fn merge_series(parts: Vec<(StationMeta, Vec<ObservationRecord>)>) -> Result<ObservationSeries> {
    let mut iter = parts.into_iter();
    let (station, mut records) = iter
        .next()
        .ok_or_else(|| Error::EmptyInput("merge_series: no parts".into()))?;
    for (meta, recs) in iter {
        if meta.name != station.name {
            return Err(Error::StationMismatch {
                expected: station.name.clone(),
                found: meta.name,
            });
        }
        records.extend(recs);
    }
    records.sort_by_key(|r| r.timestamp);
    records.dedup_by_key(|r| r.timestamp);
    Ok(ObservationSeries { station, records })
}

/// Per-channel ingest quality counters.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ChannelQc {
    pub missing: usize,
    /// Negative downwelling solar set to zero (nonzero only for dw_solar).
    pub clamped: usize,
    /// Values present but flagged by upstream quality control (qc > 0).
    pub qc_flagged: usize,
    /// Fraction of rows with a usable (present, unflagged) value.
    pub usable_fraction: f64,
}

/// Ingest-quality summary for a series.
#[derive(Debug, Clone, PartialEq)]
pub struct QcReport {
    pub rows: usize,
    pub channels: [ChannelQc; NUM_CHANNELS],
    /// Fraction of rows where every channel is present and unflagged.
    pub usable_row_fraction: f64,
}

/// Count missing, clamped, and QC-flagged values per channel.
pub fn qc_summary(series: &ObservationSeries) -> QcReport {
    let rows = series.records.len();
    let mut channels = [ChannelQc::default(); NUM_CHANNELS];
    let mut usable_rows = 0usize;
    for rec in &series.records {
        let mut row_ok = true;
        for (i, sample) in rec.channels.iter().enumerate() {
            if sample.missing {
                channels[i].missing += 1;
                row_ok = false;
            } else if sample.qc > 0 {
                channels[i].qc_flagged += 1;
                row_ok = false;
            }
        }
        if !rec.channels[Channel::DwSolar.index()].missing && rec.dw_solar_raw < 0.0 {
            channels[Channel::DwSolar.index()].clamped += 1;
        }
        if row_ok {
            usable_rows += 1;
        }
    }
    for qc in channels.iter_mut() {
        let unusable = qc.missing + qc.qc_flagged;
        qc.usable_fraction = if rows == 0 {
            0.0
        } else {
            (rows - unusable) as f64 / rows as f64
        };
    }
    QcReport {
        rows,
        channels,
        usable_row_fraction: if rows == 0 {
            0.0
        } else {
            usable_rows as f64 / rows as f64
        },
    }
}
