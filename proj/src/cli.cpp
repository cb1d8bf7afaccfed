#include "tsdecomp/cli.hpp"

#include "tsdecomp/decomposition.hpp"
#include "tsdecomp/errors.hpp"
#include "tsdecomp/evaluation.hpp"
#include "tsdecomp/fixture.hpp"
#include "tsdecomp/holt_winters.hpp"
#include "tsdecomp/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include <fmt/format.h>
#include <fmt/ranges.h>

namespace tsdecomp::cli {

namespace {

namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// DataError tagged with the file it came from.
class FileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FileError(fmt::format("{}: cannot open for reading", path));
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <typename Fn>
auto parse_file(const std::string& path, Fn&& parse) {
    const auto content = read_file(path);
    try {
        return parse(content);
    } catch (const DataError& e) {
        throw FileError(fmt::format("{}: {}", path, e.what()));
    }
}

/// Collects outputs and publishes them only when every one was staged, so a
/// failed run leaves no output file behind.
class OutputSet {
public:
    OutputSet() = default;
    OutputSet(const OutputSet&) = delete;
    OutputSet& operator=(const OutputSet&) = delete;

    ~OutputSet() {
        std::error_code ec;
        for (const auto& [tmp, dest] : staged_) {
            fs::remove(tmp, ec);
        }
    }

    void stage(const std::string& dest, const std::string& content) {
        const std::string tmp = dest + ".tmp-tsdecomp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) {
                throw FileError(fmt::format("{}: cannot open for writing", dest));
            }
            staged_.emplace_back(tmp, dest);
            out << content;
            out.flush();
            if (!out) {
                throw FileError(fmt::format("{}: write failed", dest));
            }
        }
    }

    void commit() {
        for (const auto& [tmp, dest] : staged_) {
            std::error_code ec;
            fs::rename(tmp, dest, ec);
            if (ec) {
                throw FileError(fmt::format("{}: {}", dest, ec.message()));
            }
        }
        staged_.clear();
    }

private:
    std::vector<std::pair<std::string, std::string>> staged_;
};

struct SourceOptions {
    std::string input;
    std::string fixture;

    void attach(CLI::App& cmd) {
        auto* in = cmd.add_option("--input", input, "monthly CSV (header month,value)");
        auto* fx = cmd.add_option("--fixture", fixture, "embedded series name")
                       ->check(CLI::IsMember(fixture_names()));
        in->excludes(fx);
    }

    MonthlySeries load() const {
        if (!fixture.empty()) {
            return embedded_fixture(fixture);
        }
        if (input.empty()) {
            throw UsageError("one of --input or --fixture is required");
        }
        return parse_file(input, [](const std::string& c) { return read_monthly_csv(c); });
    }
};

MonthStamp parse_month_flag(const std::string& flag, const std::string& text) {
    auto m = MonthStamp::parse(text);
    if (!m) {
        throw UsageError(fmt::format("{} expects YYYY-MM, got '{}'", flag, text));
    }
    return *m;
}

const CLI::Validator kMonthValidator(
    [](std::string& s) { return MonthStamp::parse(s) ? std::string{} : "expected YYYY-MM, got '" + s + "'"; },
    "YYYY-MM");

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Classical decomposition and Holt-Winters forecasting of monthly index series", "tsdecomp"};
    app.require_subcommand(1, 1);

    std::string input;
    std::string output;
    std::string svg;
    std::string name;
    std::string train_end;
    std::string window2_start;
    SourceOptions source;
    int horizon = 12;
    int method = 0;
    std::optional<int> months;
    bool json = false;

    auto* aggregate = app.add_subcommand("aggregate", "daily CSV -> monthly averages CSV");
    aggregate->add_option("--input", input, "daily CSV (header date,value)")->required();
    aggregate->add_option("--output", output, "monthly CSV to write")->required();

    auto* decompose = app.add_subcommand("decompose", "trend/seasonal/random decomposition (period 12)");
    source.attach(*decompose);
    decompose->add_option("--output", output, "decomposition CSV to write")->required();
    decompose->add_option("--svg", svg, "decomposition chart to write");

    auto* forecast = app.add_subcommand("forecast", "Holt-Winters (trend + additive seasonal) forecast");
    SourceOptions forecast_source;
    forecast_source.attach(*forecast);
    forecast->add_option("--train-end", train_end, "last training month")->required()->check(kMonthValidator);
    forecast->add_option("--horizon", horizon, "months to forecast")->required()->check(CLI::PositiveNumber);
    forecast->add_option("--output", output, "forecast CSV to write")->required();

    auto* evaluate = app.add_subcommand("evaluate", "run evaluation method 1-4");
    SourceOptions evaluate_source;
    evaluate_source.attach(*evaluate);
    evaluate->add_option("--method", method, "1 fixed origin, 2 rolling origin, 3 trend forecast, 4 window overlap")
        ->required()
        ->check(CLI::Range(1, 4));
    evaluate->add_option("--train-end", train_end, "last training month (end of window 1 for method 4)")
        ->required()
        ->check(kMonthValidator);
    evaluate->add_option("--months", months, "months evaluated (defaults: 12, 12, 6)")->check(CLI::PositiveNumber);
    evaluate->add_option("--window2-start", window2_start, "method 4: first month of window 2")->check(kMonthValidator);
    evaluate->add_option("--output", output, "report to write")->required();
    evaluate->add_flag("--json", json, "write JSON instead of CSV");

    auto* fixture = app.add_subcommand("fixture", "write an embedded series as monthly CSV");
    fixture->add_option("--name", name, "fixture name")->required()->check(CLI::IsMember(fixture_names()));
    fixture->add_option("--output", output, "monthly CSV to write")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        OutputSet outputs;
        std::string summary;

        if (aggregate->parsed()) {
            auto records = parse_file(input, [](const std::string& c) { return read_daily_csv(c); });
            auto series = [&] {
                try {
                    return aggregate_daily(records);
                } catch (const DataError& e) {
                    throw FileError(fmt::format("{}: {}", input, e.what()));
                }
            }();
            outputs.stage(output, write_monthly_csv(series));
            summary = fmt::format("aggregated {} daily records into {} months ({}..{}) -> {}", records.size(),
                                  series.size(), series.start().to_string(), series.end().to_string(), output);
        } else if (decompose->parsed()) {
            auto series = source.load();
            auto d = decompose_additive(series, kMonthsPerYear);
            outputs.stage(output, write_decomposition_csv(d));
            if (!svg.empty()) {
                outputs.stage(svg, render_decomposition_svg(d, 900, 720));
            }
            summary = fmt::format("decomposed {} months ({}..{}), {} with trend -> {}", series.size(),
                                  series.start().to_string(), series.end().to_string(), d.trend.defined_count(),
                                  output);
        } else if (forecast->parsed()) {
            auto series = forecast_source.load();
            auto end = parse_month_flag("--train-end", train_end);
            auto model = hw_fit(series.window(series.start(), end), kMonthsPerYear, true, true);
            auto fc = hw_forecast(model, horizon);
            outputs.stage(output, write_forecast_csv(fc));
            summary = fmt::format("fitted alpha={:.4f} beta={:.4f} gamma={:.4f} sse={:.2f}; {} months after {} -> {}",
                                  model.params.alpha, *model.params.beta, *model.params.gamma, model.sse, horizon,
                                  end.to_string(), output);
        } else if (evaluate->parsed()) {
            auto series = evaluate_source.load();
            auto end = parse_month_flag("--train-end", train_end);
            const auto format = json ? ReportFormat::json : ReportFormat::csv;
            if (method != 4 && !window2_start.empty()) {
                throw UsageError("--window2-start only applies to method 4");
            }
            std::string report;
            std::size_t rows = 0;
            switch (method) {
            case 1: {
                auto r = method_one(series, end, months.value_or(12));
                report = write_report(r, format);
                rows = r.size();
                break;
            }
            case 2: {
                auto r = method_two(series, month_add(end, 1), month_add(end, months.value_or(12)));
                report = write_report(r, format);
                rows = r.size();
                break;
            }
            case 3: {
                auto r = method_three(series, end, months.value_or(6));
                report = write_report(r, format);
                rows = r.size();
                break;
            }
            default: {
                if (months) {
                    throw UsageError("--months does not apply to method 4");
                }
                const MonthSpan w1{series.start(), end};
                const long span = months_between(w1.first, w1.second);
                const MonthStamp w2_start = window2_start.empty()
                                                ? month_add(w1.first, kMonthsPerYear)
                                                : parse_month_flag("--window2-start", window2_start);
                auto r = method_four(series, w1, {w2_start, month_add(w2_start, span)});
                report = write_report(r, format);
                rows = r.size();
                break;
            }
            }
            outputs.stage(output, report);
            summary = fmt::format("method {}: {} rows -> {}", method, rows, output);
        } else if (fixture->parsed()) {
            const auto& fx = embedded_fixture_info(name);
            outputs.stage(output, write_monthly_csv(fx.series));
            summary = fmt::format("fixture {}: {} months ({}..{}) -> {}", fx.name, fx.series.size(),
                                  fx.series.start().to_string(), fx.series.end().to_string(), output);
        }

        outputs.commit();
        out << summary << "\n";
        return kExitOk;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    } catch (const FileError& e) {
        err << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        // DataError, RangeError, ContractError from the library: the input
        // series cannot support the requested computation.
        err << "error: " << e.what() << "\n";
        return kExitData;
    }
}

} // namespace tsdecomp::cli
