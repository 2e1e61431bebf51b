#include "aiecon/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace aiecon::report {

namespace {

constexpr double kTable1RelTolerance = 0.05;
constexpr double kTable2AbsTolerance = 0.02;
constexpr double kAuditTolerance = 0.25;

std::string strf(const char* format, ...) {
    va_list args;
    va_start(args, format);
    char buf[512];
    const int n = std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return std::string(buf, buf + (n < 0 ? 0 : std::min<int>(n, sizeof buf - 1)));
}

// Full round-trip precision, used by csv and json output.
std::string g17(double v) { return strf("%.17g", v); }

// Compact display precision for statistics in table output.
std::string g6(double v) { return strf("%.6g", v); }

// Two decimals, matching the published tables.
std::string f2(double v) { return strf("%.2f", v); }

std::string csv_number(double v) { return std::isfinite(v) ? g17(v) : std::string(); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (unsigned char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (c < 0x20) {
                    out += strf("\\u%04x", c);
                } else {
                    out += static_cast<char>(c);
                }
        }
    }
    return out;
}

std::string json_string(const std::string& s) { return "\"" + json_escape(s) + "\""; }

std::string json_number(double v) { return std::isfinite(v) ? g17(v) : std::string("null"); }

std::string json_string_array(const std::vector<std::string>& items) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ",";
        out += json_string(items[i]);
    }
    out += "]";
    return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

std::string read_file(const std::string& path, errc on_missing, const char* what) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(on_missing, std::string("cannot open ") + what + " '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

panel::IndicatorPanel load_panel(const RunConfig& config) {
    if (config.input_path.empty()) fail(errc::parse, "no input file given");
    const std::string text = read_file(config.input_path, errc::parse, "input file");
    return panel::parse_panel_csv(text, config.key_policy);
}

std::vector<std::string> nonempty_countries(const panel::IndicatorPanel& panel) {
    auto countries = panel.countries();
    if (countries.empty()) fail(errc::empty_report, "no countries in the input");
    return countries;
}

composite::TechnologyLevel tech_level_for(const panel::FactorProfile& profile,
                                          const RunConfig& config) {
    if (profile.has(panel::kTechnologyLevel)) {
        composite::TechnologyLevel level;
        level.country = profile.country;
        level.value = profile.at(panel::kTechnologyLevel);
        level.n_factors = 1;
        return level;
    }
    return composite::technology_level(profile, config.zero_policy, config.key_policy);
}

}  // namespace

const char* verdict_name(Verdict verdict) noexcept {
    switch (verdict) {
        case Verdict::pass: return "PASS";
        case Verdict::fail: return "FAIL";
        case Verdict::excluded: return "EXCLUDED";
    }
    return "UNKNOWN";
}

const char* tolerance_kind_name(ToleranceKind kind) noexcept {
    return kind == ToleranceKind::absolute ? "absolute" : "relative";
}

TechLevelReport run_techlevel(const RunConfig& config) {
    const auto panel = load_panel(config);
    const auto countries = nonempty_countries(panel);

    std::span<const std::string_view> required;
    if (config.key_policy == panel::KeyPolicy::strict) {
        required = composite::technology_factor_keys();
    }

    TechLevelReport out;
    for (const auto& country : countries) {
        const auto profile =
            panel::aggregate(panel, country, config.years, config.weights, required);
        out.rows.push_back(
            composite::technology_level(profile, config.zero_policy, config.key_policy));
    }
    return out;
}

VectorReport run_vector(const RunConfig& config) {
    const auto panel = load_panel(config);
    const auto countries = nonempty_countries(panel);

    VectorReport out;
    for (const auto& country : countries) {
        const auto profile = panel::aggregate(panel, country, config.years, config.weights, {});
        const auto level = tech_level_for(profile, config);
        VectorRow row;
        row.vec = vector_model::build_vector(level, profile);
        row.magnitude = vector_model::magnitude(row.vec);
        out.rows.push_back(std::move(row));
    }
    return out;
}

RegressReport run_regress(const RunConfig& config) {
    const auto panel = load_panel(config);
    nonempty_countries(panel);

    RegressReport out;
    out.x_indicator = std::string(panel::kVectorMagnitude);
    out.y_indicator = std::string(panel::kGdpPerCapita);
    if (config.swap_axes) std::swap(out.x_indicator, out.y_indicator);

    regstats::SeriesPair pair;
    for (const auto& country : panel.countries()) {
        const auto sx = panel.series(country, out.x_indicator, config.years);
        const auto sy = panel.series(country, out.y_indicator, config.years);
        // Both series are sorted by year; advance two cursors to pair them.
        std::size_t i = 0, j = 0;
        while (i < sx.size() && j < sy.size()) {
            if (sx[i].first < sy[j].first) {
                ++i;
            } else if (sy[j].first < sx[i].first) {
                ++j;
            } else {
                pair.labels.push_back(country + ":" + std::to_string(sx[i].first));
                pair.x.push_back(sx[i].second);
                pair.y.push_back(sy[j].second);
                ++i;
                ++j;
            }
        }
    }

    out.result = regstats::regress_loglog(pair);
    out.labels = std::move(pair.labels);
    out.ln_x = regstats::log_transform(pair.x);
    out.ln_y = regstats::log_transform(pair.y);
    return out;
}

AuditSection run_audit(std::size_t n, double r_squared, double p_reported, double tolerance) {
    AuditSection out;
    out.report = regstats::audit_reported(n, r_squared, p_reported, tolerance);
    if (n == fixture::kReportedN && r_squared == fixture::kReportedRSquared &&
        p_reported == fixture::kReportedP) {
        out.notes.push_back(strf(
            "The reported %.1f%% slope cannot be re-derived: the annual 2011-2022 series "
            "behind it is not part of the bundled reference data, so only the reported "
            "(n, R^2, p) triple is audited.",
            fixture::kReportedSlopePercent));
    }
    return out;
}

ReproductionReport run_reproduce(const std::string& fixture_dir) {
    std::string t1_text, t2_text, golden_text;
    if (fixture_dir.empty()) {
        t1_text = fixture::table1_factors_csv();
        t2_text = fixture::table2_vector_csv();
        golden_text = fixture::golden_values_csv();
    } else {
        const std::string base = fixture_dir + "/";
        t1_text = read_file(base + std::string(fixture::kTable1FactorsFile), errc::integrity,
                            "reference data file");
        t2_text = read_file(base + std::string(fixture::kTable2VectorFile), errc::integrity,
                            "reference data file");
        golden_text = read_file(base + std::string(fixture::kGoldenValuesFile), errc::integrity,
                                "reference data file");
    }

    panel::IndicatorPanel t1_panel, t2_panel;
    fixture::Golden golden;
    try {
        t1_panel = panel::parse_panel_csv(t1_text);
        t2_panel = panel::parse_panel_csv(t2_text);
        golden = fixture::parse_golden_csv(golden_text);
    } catch (const Error& e) {
        if (e.code() == errc::integrity) throw;
        fail(errc::integrity, std::string("reference data corrupt: ") + e.what());
    }

    const panel::YearRange years{2011, 2022};
    const auto weights = panel::WeightScheme::uniform();
    const auto policy = composite::ZeroPolicy::reject();

    ReproductionReport out;

    for (const auto& [country, reference] : golden.table1_tech_level) {
        ReportEntry entry;
        entry.table = "table1";
        entry.country = country;
        entry.quantity = std::string(panel::kTechnologyLevel);
        entry.reference_value = reference;
        entry.tolerance = kTable1RelTolerance;
        entry.kind = ToleranceKind::relative;
        try {
            const auto profile = panel::aggregate(t1_panel, country, years, weights,
                                                  composite::technology_factor_keys());
            const auto level = composite::technology_level(profile, policy);
            entry.computed_value = level.value;
            entry.abs_diff = std::fabs(level.value - reference);
            entry.rel_diff = entry.abs_diff / std::fabs(reference);
            entry.verdict = entry.rel_diff <= entry.tolerance ? Verdict::pass : Verdict::fail;
        } catch (const Error& e) {
            if (e.code() != errc::zero_factor) throw;
            entry.verdict = Verdict::excluded;
            entry.reason = std::string(e.what()) +
                           "; the displayed 0.0 factor stands in for an unpublished unrounded "
                           "value, so this cell cannot be recomputed";
        }
        out.entries.push_back(std::move(entry));
    }

    for (const auto& [country, reference] : golden.table2_magnitude) {
        ReportEntry entry;
        entry.table = "table2";
        entry.country = country;
        entry.quantity = std::string(panel::kVectorMagnitude);
        entry.reference_value = reference;
        entry.tolerance = kTable2AbsTolerance;
        entry.kind = ToleranceKind::absolute;

        const auto profile = panel::aggregate(t2_panel, country, years, weights, {});
        RunConfig defaults;
        const auto level = tech_level_for(profile, defaults);
        const auto vec = vector_model::build_vector(level, profile);
        entry.computed_value = vector_model::magnitude(vec);
        entry.abs_diff = std::fabs(entry.computed_value - reference);
        entry.rel_diff = entry.abs_diff / std::fabs(reference);
        entry.verdict = entry.abs_diff <= entry.tolerance ? Verdict::pass : Verdict::fail;
        out.entries.push_back(std::move(entry));
    }

    out.audit = run_audit(fixture::kReportedN, fixture::kReportedRSquared, fixture::kReportedP,
                          kAuditTolerance);

    for (const auto& entry : out.entries) {
        switch (entry.verdict) {
            case Verdict::pass: ++out.n_pass; break;
            case Verdict::fail: ++out.n_fail; break;
            case Verdict::excluded: ++out.n_excluded; break;
        }
    }
    out.all_pass = out.n_fail == 0 && out.n_pass > 0;
    return out;
}

std::string render_techlevel(const TechLevelReport& report, Format format) {
    std::string out;
    switch (format) {
        case Format::table:
            out += strf("%-12s %16s %10s  %s\n", "country", "technology_level", "n_factors",
                        "excluded_factors");
            for (const auto& row : report.rows) {
                const std::string excluded =
                    row.excluded_factors.empty() ? "-" : join(row.excluded_factors, ";");
                out += strf("%-12s %16s %10d  %s\n", row.country.c_str(), f2(row.value).c_str(),
                            row.n_factors, excluded.c_str());
            }
            return out;
        case Format::csv:
            out += "country,technology_level,n_factors,excluded_factors\n";
            for (const auto& row : report.rows) {
                out += csv_field(row.country) + "," + csv_number(row.value) + "," +
                       std::to_string(row.n_factors) + "," +
                       csv_field(join(row.excluded_factors, ";")) + "\n";
            }
            return out;
        case Format::json: {
            out += "{";
            for (std::size_t i = 0; i < report.rows.size(); ++i) {
                const auto& row = report.rows[i];
                if (i) out += ",";
                out += json_string(row.country) + ":{";
                out += "\"technology_level\":" + json_number(row.value);
                out += ",\"n_factors\":" + std::to_string(row.n_factors);
                out += ",\"excluded_factors\":" + json_string_array(row.excluded_factors);
                out += "}";
            }
            out += "}\n";
            return out;
        }
    }
    return out;
}

std::string render_vector(const VectorReport& report, Format format) {
    static constexpr const char* kColumns[] = {"tech_development", "ai_adoption", "ai_workforce",
                                               "ai_productivity",  "ai_market_demand",
                                               "ai_regulatory"};
    std::string out;
    switch (format) {
        case Format::table: {
            out += strf("%-12s", "country");
            for (const char* col : kColumns) out += strf(" %16s", col);
            out += strf(" %12s\n", "magnitude");
            for (const auto& row : report.rows) {
                out += strf("%-12s", row.vec.country.c_str());
                for (double c : row.vec.components()) out += strf(" %16s", f2(c).c_str());
                out += strf(" %12s\n", f2(row.magnitude).c_str());
            }
            return out;
        }
        case Format::csv: {
            out += "country";
            for (const char* col : kColumns) out += std::string(",") + col;
            out += ",magnitude\n";
            for (const auto& row : report.rows) {
                out += csv_field(row.vec.country);
                for (double c : row.vec.components()) out += "," + csv_number(c);
                out += "," + csv_number(row.magnitude) + "\n";
            }
            return out;
        }
        case Format::json: {
            out += "{";
            for (std::size_t i = 0; i < report.rows.size(); ++i) {
                const auto& row = report.rows[i];
                if (i) out += ",";
                out += json_string(row.vec.country) + ":{\"components\":{";
                const auto components = row.vec.components();
                for (std::size_t c = 0; c < components.size(); ++c) {
                    if (c) out += ",";
                    out += std::string("\"") + kColumns[c] + "\":" + json_number(components[c]);
                }
                out += "},\"magnitude\":" + json_number(row.magnitude) + "}";
            }
            out += "}\n";
            return out;
        }
    }
    return out;
}

std::string render_regress(const RegressReport& report, Format format) {
    const auto& r = report.result;
    std::string out;
    switch (format) {
        case Format::table:
            out += strf("%-12s %s\n", "x", report.x_indicator.c_str());
            out += strf("%-12s %s\n", "y", report.y_indicator.c_str());
            out += strf("%-12s %zu\n", "n", r.n);
            out += strf("%-12s %s\n", "slope", g6(r.slope_b1).c_str());
            out += strf("%-12s %s\n", "intercept", g6(r.intercept_b0).c_str());
            out += strf("%-12s %s\n", "pearson_r", g6(r.pearson_r).c_str());
            out += strf("%-12s %s\n", "r_squared", g6(r.r_squared).c_str());
            out += strf("%-12s %s\n", "t_stat", g6(r.t_stat).c_str());
            out += strf("%-12s %s\n", "df", g6(r.df).c_str());
            out += strf("%-12s %s\n", "p_value",
                        r.perfect_fit ? "< 1e-15" : g6(r.p_value).c_str());
            out += strf("%-12s %s\n", "perfect_fit", r.perfect_fit ? "yes" : "no");
            return out;
        case Format::csv:
            out += "x,y,n,slope,intercept,pearson_r,r_squared,t_stat,df,p_value,perfect_fit\n";
            out += csv_field(report.x_indicator) + "," + csv_field(report.y_indicator) + "," +
                   std::to_string(r.n) + "," + csv_number(r.slope_b1) + "," +
                   csv_number(r.intercept_b0) + "," + csv_number(r.pearson_r) + "," +
                   csv_number(r.r_squared) + "," + csv_number(r.t_stat) + "," +
                   csv_number(r.df) + "," + csv_number(r.p_value) + "," +
                   (r.perfect_fit ? "true" : "false") + "\n";
            return out;
        case Format::json:
            out += "{";
            out += "\"x\":" + json_string(report.x_indicator);
            out += ",\"y\":" + json_string(report.y_indicator);
            out += ",\"n\":" + std::to_string(r.n);
            out += ",\"slope\":" + json_number(r.slope_b1);
            out += ",\"intercept\":" + json_number(r.intercept_b0);
            out += ",\"pearson_r\":" + json_number(r.pearson_r);
            out += ",\"r_squared\":" + json_number(r.r_squared);
            out += ",\"t_stat\":" + json_number(r.t_stat);
            out += ",\"df\":" + json_number(r.df);
            out += ",\"p_value\":" + json_number(r.p_value);
            out += std::string(",\"perfect_fit\":") + (r.perfect_fit ? "true" : "false");
            out += "}\n";
            return out;
    }
    return out;
}

namespace {

std::string render_audit_table(const AuditSection& audit) {
    const auto& a = audit.report;
    std::string out;
    out += "Audit of reported regression triple\n";
    out += strf("  %-22s %zu\n", "n", a.n);
    out += strf("  %-22s %s\n", "degrees_of_freedom", g6(a.df).c_str());
    out += strf("  %-22s %s\n", "reported_r_squared", g6(a.r_squared_reported).c_str());
    out += strf("  %-22s %s\n", "reported_p", g6(a.p_reported).c_str());
    out += strf("  %-22s %s\n", "implied_t_abs", g6(a.implied_t_abs).c_str());
    out += strf("  %-22s %s\n", "implied_p", g6(a.implied_p).c_str());
    out += strf("  %-22s %s\n", "relative_difference", g6(a.ratio).c_str());
    out += strf("  %-22s %s\n", "tolerance", g6(a.tolerance).c_str());
    out += strf("  %-22s %s\n", "verdict", regstats::audit_verdict_name(a.verdict));
    for (const auto& note : audit.notes) out += "  note: " + note + "\n";
    return out;
}

std::string render_audit_json_object(const AuditSection& audit) {
    const auto& a = audit.report;
    std::string out = "{";
    out += "\"n\":" + std::to_string(a.n);
    out += ",\"df\":" + json_number(a.df);
    out += ",\"r_squared_reported\":" + json_number(a.r_squared_reported);
    out += ",\"p_reported\":" + json_number(a.p_reported);
    out += ",\"implied_t_abs\":" + json_number(a.implied_t_abs);
    out += ",\"implied_p\":" + json_number(a.implied_p);
    out += ",\"ratio\":" + json_number(a.ratio);
    out += ",\"tolerance\":" + json_number(a.tolerance);
    out += ",\"verdict\":" + json_string(regstats::audit_verdict_name(a.verdict));
    out += ",\"notes\":" + json_string_array(audit.notes);
    out += "}";
    return out;
}

}  // namespace

std::string render_audit(const AuditSection& audit, Format format) {
    const auto& a = audit.report;
    switch (format) {
        case Format::table:
            return render_audit_table(audit);
        case Format::csv: {
            std::string out =
                "n,df,r_squared_reported,p_reported,implied_t_abs,implied_p,ratio,tolerance,"
                "verdict\n";
            out += std::to_string(a.n) + "," + csv_number(a.df) + "," +
                   csv_number(a.r_squared_reported) + "," + csv_number(a.p_reported) + "," +
                   csv_number(a.implied_t_abs) + "," + csv_number(a.implied_p) + "," +
                   csv_number(a.ratio) + "," + csv_number(a.tolerance) + "," +
                   regstats::audit_verdict_name(a.verdict) + "\n";
            return out;
        }
        case Format::json:
            return render_audit_json_object(audit) + "\n";
    }
    return {};
}

std::string render_reproduction(const ReproductionReport& report, Format format) {
    std::string out;
    switch (format) {
        case Format::table: {
            out += strf("Reference table 1: technology level (tolerance %.0f%% relative)\n",
                        kTable1RelTolerance * 100.0);
            out += strf("  %-12s %10s %10s %9s  %s\n", "country", "reference", "computed",
                        "rel_diff", "verdict");
            for (const auto& e : report.entries) {
                if (e.table != "table1") continue;
                if (e.verdict == Verdict::excluded) {
                    out += strf("  %-12s %10s %10s %9s  %s  %s\n", e.country.c_str(),
                                f2(e.reference_value).c_str(), "-", "-",
                                verdict_name(e.verdict), e.reason.c_str());
                } else {
                    out += strf("  %-12s %10s %10s %8.2f%%  %s\n", e.country.c_str(),
                                f2(e.reference_value).c_str(), f2(e.computed_value).c_str(),
                                e.rel_diff * 100.0, verdict_name(e.verdict));
                }
            }
            out += strf("\nReference table 2: vector magnitude (tolerance %.2f absolute)\n",
                        kTable2AbsTolerance);
            out += strf("  %-12s %10s %10s %9s  %s\n", "country", "reference", "computed",
                        "abs_diff", "verdict");
            for (const auto& e : report.entries) {
                if (e.table != "table2") continue;
                out += strf("  %-12s %10s %10s %9s  %s\n", e.country.c_str(),
                            f2(e.reference_value).c_str(), f2(e.computed_value).c_str(),
                            f2(e.abs_diff).c_str(), verdict_name(e.verdict));
            }
            out += "\n" + render_audit_table(report.audit);
            out += strf("\nSummary: %d PASS, %d FAIL, %d EXCLUDED -> %s\n", report.n_pass,
                        report.n_fail, report.n_excluded, report.all_pass ? "PASS" : "FAIL");
            return out;
        }
        case Format::csv: {
            out +=
                "record,table,country,quantity,reference,computed,abs_diff,rel_diff,tolerance,"
                "kind,verdict,detail\n";
            for (const auto& e : report.entries) {
                out += "comparison," + e.table + "," + csv_field(e.country) + "," + e.quantity +
                       "," + csv_number(e.reference_value) + "," + csv_number(e.computed_value) +
                       "," + csv_number(e.abs_diff) + "," + csv_number(e.rel_diff) + "," +
                       csv_number(e.tolerance) + "," + tolerance_kind_name(e.kind) + "," +
                       verdict_name(e.verdict) + "," + csv_field(e.reason) + "\n";
            }
            const auto& a = report.audit.report;
            out += "audit,,,implied_t_abs,," + csv_number(a.implied_t_abs) + ",,,,,,\n";
            out += "audit,,,implied_p," + csv_number(a.p_reported) + "," +
                   csv_number(a.implied_p) + "," +
                   csv_number(std::fabs(a.implied_p - a.p_reported)) + "," +
                   csv_number(a.ratio) + "," + csv_number(a.tolerance) + ",relative," +
                   regstats::audit_verdict_name(a.verdict) + "," +
                   csv_field(join(report.audit.notes, " ")) + "\n";
            out += strf("summary,,,overall,,,,,,,%s,%s\n", report.all_pass ? "PASS" : "FAIL",
                        csv_field(strf("%d PASS / %d FAIL / %d EXCLUDED", report.n_pass,
                                       report.n_fail, report.n_excluded))
                            .c_str());
            return out;
        }
        case Format::json: {
            out += "{\"entries\":[";
            for (std::size_t i = 0; i < report.entries.size(); ++i) {
                const auto& e = report.entries[i];
                if (i) out += ",";
                out += "{\"table\":" + json_string(e.table);
                out += ",\"country\":" + json_string(e.country);
                out += ",\"quantity\":" + json_string(e.quantity);
                out += ",\"reference\":" + json_number(e.reference_value);
                out += ",\"computed\":" + json_number(e.computed_value);
                out += ",\"abs_diff\":" + json_number(e.abs_diff);
                out += ",\"rel_diff\":" + json_number(e.rel_diff);
                out += ",\"tolerance\":" + json_number(e.tolerance);
                out += ",\"kind\":" + json_string(tolerance_kind_name(e.kind));
                out += ",\"verdict\":" + json_string(verdict_name(e.verdict));
                out += ",\"reason\":" + json_string(e.reason);
                out += "}";
            }
            out += "],\"audit\":" + render_audit_json_object(report.audit);
            out += strf(",\"summary\":{\"pass\":%d,\"fail\":%d,\"excluded\":%d,\"all_pass\":%s}",
                        report.n_pass, report.n_fail, report.n_excluded,
                        report.all_pass ? "true" : "false");
            out += "}\n";
            return out;
        }
    }
    return out;
}

std::string points_csv(const RegressReport& report) {
    std::string out = "kind,label,ln_x,ln_y\n";
    for (std::size_t i = 0; i < report.ln_x.size(); ++i) {
        const std::string label = i < report.labels.size() ? report.labels[i] : "";
        out += "point," + csv_field(label) + "," + g17(report.ln_x[i]) + "," +
               g17(report.ln_y[i]) + "\n";
    }
    if (!report.ln_x.empty()) {
        const auto [lo, hi] = std::minmax_element(report.ln_x.begin(), report.ln_x.end());
        const auto& r = report.result;
        out += "fit,line_start," + g17(*lo) + "," + g17(r.intercept_b0 + r.slope_b1 * *lo) + "\n";
        out += "fit,line_end," + g17(*hi) + "," + g17(r.intercept_b0 + r.slope_b1 * *hi) + "\n";
    }
    return out;
}

}  // namespace aiecon::report
