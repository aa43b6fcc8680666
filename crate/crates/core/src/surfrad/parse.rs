//! Parser for SURFRAD daily ASCII files.
//!
//! Layout (per the published NOAA daily-file README): a station-name line, a
//! latitude/longitude/elevation line, then whitespace-separated data rows of
//! `year jday month day hour min dt zen` followed by one value/QC pair per
//! channel in canonical order.

use super::{Channel, ChannelSample, ObservationRecord, NUM_CHANNELS};
use crate::error::{Error, Result};
use crate::stations::StationMeta;
use chrono::{TimeZone, Utc};

/// Any value at or below this is treated as a missing-data sentinel
/// (the archive uses the -9999.9 family, with variants).
pub const MISSING_SENTINEL: f64 = -9000.0;

/// Fields before the value/QC pairs: year jday month day hour min dt zen.
const TIME_FIELDS: usize = 8;
const ROW_FIELDS: usize = TIME_FIELDS + 2 * NUM_CHANNELS;

/// A skipped data row, with the reason.
#[derive(Debug, Clone, PartialEq)]
pub struct RowError {
    /// Zero-based index among data rows (not counting the two header lines).
    pub row: usize,
    /// One-based line number in the file.
    pub line: usize,
    pub message: String,
}

/// Result of parsing one daily file.
#[derive(Debug, Clone)]
pub struct ParsedDay {
    pub station: StationMeta,
    pub records: Vec<ObservationRecord>,
    /// Rows that were skipped; parsing continues past them.
    pub row_errors: Vec<RowError>,
}

/// Parse one daily station file.
///
/// Sentinel values become `missing`; negative downwelling solar is clamped to
/// zero with the original kept in `dw_solar_raw`. Malformed rows are skipped
/// and collected in `row_errors`; a malformed header or an empty file is a
/// hard error.
pub fn parse_daily_file(input: &[u8]) -> Result<ParsedDay> {
    let text = String::from_utf8_lossy(input);
    let mut lines = text.lines().enumerate();

    let (_, name_line) = lines
        .next()
        .ok_or_else(|| Error::Parse {
            line: 1,
            message: "empty file".into(),
        })?;
    let name = name_line.trim();
    if name.is_empty() {
        return Err(Error::Parse {
            line: 1,
            message: "blank station-name line".into(),
        });
    }

    let (_, geo_line) = lines.next().ok_or_else(|| Error::Parse {
        line: 2,
        message: "missing latitude/longitude/elevation line".into(),
    })?;
    let geo: Vec<&str> = geo_line.split_whitespace().collect();
    if geo.len() < 3 {
        return Err(Error::Parse {
            line: 2,
            message: format!("expected lat lon elevation, found {} fields", geo.len()),
        });
    }
    let parse_geo = |s: &str, what: &str| -> Result<f64> {
        s.parse::<f64>().map_err(|_| Error::Parse {
            line: 2,
            message: format!("unparseable {what}: '{s}'"),
        })
    };
    let latitude = parse_geo(geo[0], "latitude")?;
    let longitude = parse_geo(geo[1], "longitude")?;
    let elevation = parse_geo(geo[2], "elevation")?;
    let station = StationMeta {
        name: name.to_string(),
        latitude,
        longitude,
        elevation,
    };
    station.validate().map_err(|e| Error::Parse {
        line: 2,
        message: format!("header out of range: {e}"),
    })?;

    let mut records = Vec::new();
    let mut row_errors = Vec::new();
    let mut row_index = 0usize;
    for (line_idx, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        match parse_row(line) {
            Ok(record) => records.push(record),
            Err(message) => row_errors.push(RowError {
                row: row_index,
                line: line_idx + 1,
                message,
            }),
        }
        row_index += 1;
    }
    if records.is_empty() && row_errors.is_empty() {
        return Err(Error::Parse {
            line: 3,
            message: "no data rows".into(),
        });
    }
    Ok(ParsedDay {
        station,
        records,
        row_errors,
    })
}

fn parse_row(line: &str) -> std::result::Result<ObservationRecord, String> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != ROW_FIELDS {
        return Err(format!("expected {ROW_FIELDS} fields, found {}", fields.len()));
    }
    let int = |i: usize, what: &str| -> std::result::Result<i64, String> {
        fields[i]
            .parse::<i64>()
            .map_err(|_| format!("unparseable {what}: '{}'", fields[i]))
    };
    let year = int(0, "year")?;
    let month = int(2, "month")?;
    let day = int(3, "day")?;
    let hour = int(4, "hour")?;
    let minute = int(5, "min")?;
    let timestamp = Utc
        .with_ymd_and_hms(
            i32::try_from(year).map_err(|_| "year out of range".to_string())?,
            u32::try_from(month).map_err(|_| "month out of range".to_string())?,
            u32::try_from(day).map_err(|_| "day out of range".to_string())?,
            u32::try_from(hour).map_err(|_| "hour out of range".to_string())?,
            u32::try_from(minute).map_err(|_| "minute out of range".to_string())?,
            0,
        )
        .single()
        .ok_or_else(|| format!("invalid date {year}-{month}-{day} {hour}:{minute}"))?;

    let zenith: f64 = fields[7]
        .parse()
        .map_err(|_| format!("unparseable zenith: '{}'", fields[7]))?;
    if !zenith.is_finite() || !(0.0..=180.0).contains(&zenith) {
        return Err(format!("zenith {zenith} outside [0, 180]"));
    }

    let mut channels = [ChannelSample::MISSING; NUM_CHANNELS];
    let mut dw_solar_raw = 0.0;
    for (ci, channel) in Channel::ALL.iter().enumerate() {
        let vi = TIME_FIELDS + 2 * ci;
        let raw: f64 = fields[vi]
            .parse()
            .map_err(|_| format!("unparseable {}: '{}'", channel.name(), fields[vi]))?;
        let qc: i32 = fields[vi + 1]
            .parse()
            .map_err(|_| format!("unparseable qc_{}: '{}'", channel.name(), fields[vi + 1]))?;
        if *channel == Channel::DwSolar {
            dw_solar_raw = raw;
        }
        channels[ci] = interpret_sample(*channel, raw, qc);
    }

    Ok(ObservationRecord {
        timestamp,
        zenith,
        channels,
        dw_solar_raw,
    })
}

fn interpret_sample(channel: Channel, raw: f64, qc: i32) -> ChannelSample {
    if !raw.is_finite() || raw <= MISSING_SENTINEL {
        return ChannelSample { value: 0.0, qc, missing: true };
    }
    let value = match channel {
        // Negative GHI (night thermal offset) is set to zero.
        Channel::DwSolar => raw.max(0.0),
        // Degrees clockwise from north, normalized into [0, 360).
        Channel::Winddir => raw.rem_euclid(360.0),
        _ => raw,
    };
    // Enforce stated range invariants by marking violations missing.
    if channel == Channel::Rh && !(0.0..=100.0).contains(&value) {
        return ChannelSample { value: 0.0, qc, missing: true };
    }
    ChannelSample { value, qc, missing: false }
}

/// Three hand-verified rows pinned against the published column layout:
/// 8 time/geometry fields, then value/QC pairs in canonical channel order.
#[cfg(test)]
pub(crate) const FIXTURE_DAY: &str = "\
 Testville
   40.050 -88.370 213 m version 1
 2009   1  1  1  0  0  0.000 105.11    -4.2 0     0.5 0    -0.4 0    -2.5 0   284.5 0   273.44 0   273.74 0   316.29 0   274.06 0   273.87 0     0.0 0     0.1 0    -4.7 0   -31.8 0   -36.5 0    -2.3 0    72.5 0     3.2 0   245.0 0   978.4 0
 2009   1  1  1  0  1  0.017 105.07 -9999.9 1     0.6 0    -0.3 0    -2.4 0   284.6 0   273.45 0   273.75 0   316.30 0   274.07 0   273.88 0     0.0 0     0.1 0    -4.6 0   -31.7 0   -36.3 0    -2.3 0    72.6 0     3.3 0   246.0 0   978.4 0
 2009   1  1  1 18 30 18.500  60.20   432.1 0    88.3 0   646.2 0   101.5 0   301.2 0   275.10 0   275.40 0   340.10 0   276.20 0   276.00 0  1850.0 0   210.3 0   343.8 0   -38.9 0   304.9 0     4.1 0    55.2 0     5.0 0   190.0 0   979.1 0
";

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_rows_hand_parsed() {
        let day = parse_daily_file(FIXTURE_DAY.as_bytes()).unwrap();
        assert_eq!(day.station.name, "Testville");
        assert!((day.station.latitude - 40.05).abs() < 1e-9);
        assert!((day.station.longitude - -88.37).abs() < 1e-9);
        assert!((day.station.elevation - 213.0).abs() < 1e-9);
        assert_eq!(day.records.len(), 3);
        assert!(day.row_errors.is_empty());

        // Row 0: night row; dw_solar -4.2 clamps to 0.0 with raw preserved.
        let r0 = &day.records[0];
        assert_eq!(r0.timestamp.to_rfc3339(), "2009-01-01T00:00:00+00:00");
        assert!((r0.zenith - 105.11).abs() < 1e-9);
        assert_eq!(r0.channel(Channel::DwSolar).get(), Some(0.0));
        assert!((r0.dw_solar_raw - -4.2).abs() < 1e-9);
        // Other channels are not clamped.
        assert_eq!(r0.channel(Channel::DirectN).get(), Some(-0.4));
        assert_eq!(r0.channel(Channel::Diffuse).get(), Some(-2.5));
        assert_eq!(r0.channel(Channel::DwIr).get(), Some(284.5));
        assert_eq!(r0.channel(Channel::DwCasetemp).get(), Some(273.44));
        assert_eq!(r0.channel(Channel::UwIr).get(), Some(316.29));
        assert_eq!(r0.channel(Channel::Netrad).get(), Some(-36.5));
        assert_eq!(r0.channel(Channel::AirTemp10m).get(), Some(-2.3));
        assert_eq!(r0.channel(Channel::Rh).get(), Some(72.5));
        assert_eq!(r0.channel(Channel::Winddir).get(), Some(245.0));
        assert_eq!(r0.channel(Channel::Pressure).get(), Some(978.4));

        // Row 1: -9999.9 sentinel becomes missing; QC flag retained.
        let r1 = &day.records[1];
        assert!(r1.channel(Channel::DwSolar).missing);
        assert_eq!(r1.channel(Channel::DwSolar).qc, 1);
        assert!((r1.dw_solar_raw - -9999.9).abs() < 1e-9);
        assert_eq!(r1.channel(Channel::UwSolar).get(), Some(0.6));

        // Row 2: daytime values land on the right channels.
        let r2 = &day.records[2];
        assert_eq!(r2.timestamp.to_rfc3339(), "2009-01-01T18:30:00+00:00");
        assert!((r2.zenith - 60.2).abs() < 1e-9);
        assert_eq!(r2.channel(Channel::DwSolar).get(), Some(432.1));
        assert_eq!(r2.channel(Channel::UwSolar).get(), Some(88.3));
        assert_eq!(r2.channel(Channel::DirectN).get(), Some(646.2));
        assert_eq!(r2.channel(Channel::Uvb).get(), Some(1850.0));
        assert_eq!(r2.channel(Channel::Par).get(), Some(210.3));
        assert_eq!(r2.channel(Channel::Netsolar).get(), Some(343.8));
        assert_eq!(r2.channel(Channel::Windspd).get(), Some(5.0));
    }

    #[test]
    fn malformed_header_is_hard_error() {
        let err = parse_daily_file(b" Testville\n  not numbers here\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
        assert!(parse_daily_file(b"").is_err());
        assert!(parse_daily_file(b" Testville\n").is_err());
    }

    #[test]
    fn bad_row_is_collected_and_skipped() {
        let mut text = FIXTURE_DAY.to_string();
        text.push_str(" 2009   1  1  1 18 31 18.517  60.10 garbage\n");
        let day = parse_daily_file(text.as_bytes()).unwrap();
        assert_eq!(day.records.len(), 3);
        assert_eq!(day.row_errors.len(), 1);
        assert_eq!(day.row_errors[0].row, 3);
        assert_eq!(day.row_errors[0].line, 6);
    }

    #[test]
    fn rh_out_of_range_marked_missing() {
        let text = FIXTURE_DAY.replace("    72.5 0", "   130.0 0");
        let day = parse_daily_file(text.as_bytes()).unwrap();
        assert!(day.records[0].channel(Channel::Rh).missing);
    }

    #[test]
    fn winddir_normalized_into_range() {
        let text = FIXTURE_DAY.replace("   245.0 0   978.4", "   360.0 0   978.4");
        let day = parse_daily_file(text.as_bytes()).unwrap();
        assert_eq!(day.records[0].channel(Channel::Winddir).get(), Some(0.0));
    }

    #[test]
    fn sentinel_variants_all_missing() {
        for sentinel in ["-9999.9", "-9999.0", "-9999", "-99999.9"] {
            let text = FIXTURE_DAY.replace("   432.1 0", &format!("  {sentinel} 0"));
            let day = parse_daily_file(text.as_bytes()).unwrap();
            assert!(
                day.records[2].channel(Channel::DwSolar).missing,
                "sentinel {sentinel} not treated as missing"
            );
        }
    }
}
