#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcw/classify.hpp"
#include "qcw/obstruction.hpp"
#include "qcw/resonance.hpp"
#include "qcw/scan.hpp"

namespace qcw::cli {

namespace {

using nlohmann::json;

enum class Format { text, json, csv };

Format parse_format(std::string_view name) {
    if (name == "text") return Format::text;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    throw ValidationError("unknown format '" + std::string(name) + "' (expected text, json or csv)");
}

const std::vector<Int> kTableDPrimes = {11, 13, 17, 19, 23};
const std::vector<Int> kTableFPrimes = {5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};

std::string brace_list(std::span<const Int> values) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ", ";
        out << values[i];
    }
    out << '}';
    return out.str();
}

// Left-aligned columns joined by " | "; the last column is never padded.
std::string render_columns(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        widths.resize(std::max(widths.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    }
    std::ostringstream out;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << " | ";
            out << row[c];
            if (c + 1 < row.size()) out << std::string(widths[c] - row[c].size(), ' ');
        }
        out << '\n';
    }
    return out.str();
}

json failure_json(const std::optional<Failure>& failure) {
    if (!failure) return nullptr;
    json out = {{"kind", std::string(to_string(failure->kind))}, {"level", failure->level}};
    out["window"] = failure->window ? json(*failure->window) : json(nullptr);
    return out;
}

std::string failure_text(const Failure& failure) {
    std::string text = std::string(to_string(failure.kind)) + " at level " + std::to_string(failure.level);
    if (failure.window) text += ", window M=" + std::to_string(*failure.window);
    return text;
}

json window_json(const Window& window) {
    return {{"index", window.index}, {"lower", window.lower}, {"upper", window.upper}};
}

std::string window_text(const Window& window) {
    return "(" + std::to_string(window.lower) + ", " + std::to_string(window.upper) + ")";
}

std::string witnesses_text(const std::vector<Int>& witnesses) {
    std::string text;
    for (std::size_t q = 0; q < witnesses.size(); ++q) {
        if (q) text += " ";
        text += "M" + std::to_string(q + 3) + "=" + std::to_string(witnesses[q]);
    }
    return text;
}

struct Outcome {
    int code = kSuccess;
    json input;
    json result;
    std::string text;
    std::string backend = "none";
};

Outcome do_classify(const std::vector<Int>& raw) {
    const WeightTuple weight = WeightTuple::validate(raw);
    const MembershipVerdict verdict = is_in_class(weight);
    Outcome out;
    out.backend = "apery";
    out.input = {{"weights", raw}};
    out.result = {{"weight", raw},
                  {"in_class", verdict.in_class},
                  {"witnesses", verdict.witnesses},
                  {"failure", failure_json(verdict.failure)}};
    std::ostringstream text;
    text << "weight " << weight.to_string() << ": " << (verdict.in_class ? "in class" : "not in class") << '\n';
    if (!verdict.witnesses.empty()) text << "witnesses: " << witnesses_text(verdict.witnesses) << '\n';
    if (verdict.failure) text << "failure: " << failure_text(*verdict.failure) << '\n';
    out.text = text.str();
    out.code = verdict.in_class ? kSuccess : kNegativeAnswer;
    return out;
}

Outcome do_criteria(const std::vector<Int>& raw) {
    const WeightTuple weight = WeightTuple::validate(raw);
    json tags = json::array();
    std::string text = "weight " + weight.to_string() + ":";
    for (Criterion c : check_n3_criteria(weight)) {
        tags.push_back(std::string(to_string(c)));
        text += " " + std::string(to_string(c));
    }
    if (tags.empty()) text += " (none)";
    Outcome out;
    out.backend = "apery";
    out.input = {{"weights", raw}};
    out.result = {{"weight", raw}, {"criteria", tags}};
    out.text = text + "\n";
    return out;
}

Outcome do_iset(const std::vector<Int>& raw, Int window_index, Backend backend) {
    const WeightPrefix prefix = WeightPrefix::from(raw);
    const ObstructionSet set = obstruction_set(prefix, window_index, backend);
    Outcome out;
    out.backend = std::string(to_string(backend));
    out.input = {{"prefix", raw}, {"M", window_index}};
    out.result = {{"prefix", raw}, {"window", window_json(set.window)}, {"elements", set.elements},
                  {"size", set.size()}};
    out.text = "I" + prefix.to_string() + " M=" + std::to_string(window_index) + " window " + window_text(set.window) +
               ": " + brace_list(set.elements) + "\n";
    return out;
}

Outcome do_resonances(const std::vector<Int>& raw) {
    const WeightTuple weight = WeightTuple::validate(raw);
    const auto witnesses = resonances(weight);
    json list = json::array();
    std::ostringstream text;
    text << "weight " << weight.to_string() << ": ";
    text << (witnesses.empty() ? "resonance-free" : std::to_string(witnesses.size()) + " resonance(s)") << '\n';
    for (const auto& w : witnesses) {
        list.push_back({{"i", w.i}, {"j", w.j}, {"k", std::vector<Int>(w.k.values().begin(), w.k.values().end())}});
        text << "  i=" << w.i << " j=" << w.j << " k=" << w.k.to_string() << '\n';
    }
    Outcome out;
    out.input = {{"weights", raw}};
    out.result = {{"weight", raw}, {"count", witnesses.size()}, {"witnesses", list},
                  {"resonance_free", witnesses.empty()}};
    out.text = text.str();
    return out;
}

Outcome do_enumerate(const std::vector<Int>& raw, Int window_index, Backend backend) {
    const WeightPrefix prefix = WeightPrefix::from(raw);
    const auto admissible = enumerate_admissible(prefix, window_index, backend);
    const Window window = make_window(prefix.sum(), window_index);
    Outcome out;
    out.backend = std::string(to_string(backend));
    out.input = {{"prefix", raw}, {"M", window_index}};
    out.result = {{"prefix", raw}, {"window", window_json(window)}, {"admissible", admissible},
                  {"count", admissible.size()}};
    out.text = "S" + prefix.to_string() + " M=" + std::to_string(window_index) + " window " + window_text(window) +
               ": " + brace_list(admissible) + "\n";
    return out;
}

Outcome do_count(Int m1, Int m2, Backend backend) {
    const CountReport report = closed_form_count(m1, m2, backend);
    Outcome out;
    out.backend = std::string(to_string(backend));
    out.input = {{"m1", m1}, {"m2", m2}};
    out.result = {{"m1", m1},
                  {"m2", m2},
                  {"window_size", report.window_size},
                  {"i_set_size", report.i_set_size},
                  {"gap_set", report.gap_set},
                  {"gap_set_size", report.gap_set.size()},
                  {"formula", report.closed_form ? json(std::string(to_string(report.formula))) : json(nullptr)},
                  {"closed_form", report.closed_form ? json(*report.closed_form) : json(nullptr)},
                  {"matches", report.matches ? json(*report.matches) : json(nullptr)},
                  {"note", report.note ? json(*report.note) : json(nullptr)}};
    std::ostringstream text;
    text << "m1=" << m1 << " m2=" << m2 << '\n';
    text << "window (" << m1 + m2 << ", " << 2 * (m1 + m2) << "): " << report.window_size << " integers, |I| = "
         << report.i_set_size << '\n';
    text << "S = " << brace_list(report.gap_set) << " (|S| = " << report.gap_set.size() << ")\n";
    if (report.closed_form) {
        text << "closed form " << to_string(report.formula) << " = " << *report.closed_form << ": "
             << (*report.matches ? "matches" : "MISMATCH") << '\n';
    } else {
        text << "closed form: absent (" << report.note.value_or("") << ")\n";
    }
    out.text = text.str();
    if (report.matches && !*report.matches) out.code = kOracleMismatch;
    return out;
}

Outcome do_table(const std::string& name) {
    Outcome out;
    out.input = {{"name", name}};
    if (name == "d-table") {
        const auto rows = table_d(5, kTableDPrimes);
        json list = json::array();
        for (const auto& row : rows) {
            list.push_back({{"m2", row.m2}, {"d", row.d ? json(*row.d) : json(nullptr)}, {"S", row.gap_set}});
        }
        out.result = {{"m1", 5}, {"rows", list}};
        out.text = render_d_table(5, rows);
        for (const auto& row : rows) {
            if (!row.d || *row.d != static_cast<Int>(row.gap_set.size())) out.code = kOracleMismatch;
        }
    } else if (name == "f-table") {
        const auto rows = table_f(kTableFPrimes);
        json list = json::array();
        for (const auto& row : rows) {
            list.push_back({{"m2", row.m2}, {"f", row.f}});
            const auto report = closed_form_count(3, row.m2);
            if (static_cast<Int>(report.gap_set.size()) != row.f) out.code = kOracleMismatch;
        }
        out.result = {{"m1", 3}, {"rows", list}};
        out.text = render_f_table(rows);
    } else {
        throw ValidationError("unknown table '" + name + "' (expected d-table or f-table)");
    }
    return out;
}

json scan_row_json(const ScanRow& row) {
    json sizes = json::array();
    for (const auto& s : row.iset_sizes) sizes.push_back(s ? json(*s) : json(nullptr));
    return {{"weight", std::vector<Int>(row.weight.values().begin(), row.weight.values().end())},
            {"in_class", row.in_class},
            {"witnesses", row.witnesses},
            {"failure", failure_json(row.failure)},
            {"resonances", row.resonance_count},
            {"iset_sizes", sizes}};
}

std::string join_space(std::span<const Int> values) {
    std::string text;
    for (std::size_t q = 0; q < values.size(); ++q) {
        if (q) text += ' ';
        text += std::to_string(values[q]);
    }
    return text;
}

std::string scan_row_csv(const ScanRow& row) {
    std::string sizes;
    for (std::size_t q = 0; q < row.iset_sizes.size(); ++q) {
        if (q) sizes += ' ';
        sizes += row.iset_sizes[q] ? std::to_string(*row.iset_sizes[q]) : "-";
    }
    std::string failure = row.failure ? std::string(to_string(row.failure->kind)) : "";
    return join_space(row.weight.values()) + "," + (row.in_class ? "true" : "false") + "," +
           join_space(row.witnesses) + "," + failure + "," + std::to_string(row.resonance_count) + "," + sizes;
}

}  // namespace

std::string render_d_table(Int m1, const std::vector<DTableRow>& rows) {
    std::vector<std::vector<std::string>> cells = {{"m2", "d", "S"}};
    for (const auto& row : rows) {
        cells.push_back({std::to_string(row.m2), row.d ? std::to_string(*row.d) : "-", brace_list(row.gap_set)});
    }
    return "d and S for m1 = " + std::to_string(m1) + "\n" + render_columns(cells);
}

std::string render_f_table(const std::vector<FTableRow>& rows) {
    std::vector<std::vector<std::string>> cells = {{"m2"}, {"f(m2)"}};
    for (const auto& row : rows) {
        cells[0].push_back(std::to_string(row.m2));
        cells[1].push_back(std::to_string(row.f));
    }
    return "f(m2) = m2 - 2 - floor(2 m2 / 3)\n" + render_columns(cells);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact analyzer for quasi-circular domain weights", "qcw"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name;
    if (const char* env = std::getenv("QCW_FORMAT")) format_name = env;
    std::string out_path;
    bool no_timing = false;
    app.add_option("--format", format_name, "Output format: text, json or csv (default from QCW_FORMAT)");
    app.add_option("--out", out_path, "Write results to FILE instead of stdout");
    app.add_flag("--no-timing", no_timing, "Omit elapsed_ms from JSON output");

    std::vector<Int> values;
    Int window_index = 0;
    std::string backend_name = "apery";
    Int m1 = 0, m2 = 0;
    std::string table_name;
    std::size_t scan_n = 3;
    Int scan_max = 12;
    std::string filter_name = "all";
    unsigned threads = 1;

    auto* classify = app.add_subcommand("classify", "Decide class membership of a weight");
    classify->add_option("weights", values, "Weight entries m1 < ... < mn")->required();

    auto* criteria = app.add_subcommand("criteria", "List the sufficient criteria a 3-entry weight meets");
    criteria->add_option("weights", values, "Weight entries m1 < m2 < m3")->required();

    auto* iset = app.add_subcommand("iset", "Compute the obstruction set of a prefix");
    iset->add_option("prefix", values, "Prefix entries")->required();
    iset->add_option("--M", window_index, "Window index M >= 1")->required();
    iset->add_option("--backend", backend_name, "brute, sieve or apery");

    auto* reson = app.add_subcommand("resonances", "List all resonances of a weight");
    reson->add_option("weights", values, "Weight entries")->required();

    auto* enumerate = app.add_subcommand("enumerate", "Admissible next entries in window M");
    enumerate->add_option("prefix", values, "Prefix entries")->required();
    enumerate->add_option("--M", window_index, "Window index M >= 1")->required();
    enumerate->add_option("--backend", backend_name, "brute, sieve or apery");

    auto* count = app.add_subcommand("count", "Compare closed-form counts with enumeration");
    count->add_option("m1", m1)->required();
    count->add_option("m2", m2)->required();
    count->add_option("--backend", backend_name, "brute, sieve or apery");

    auto* table = app.add_subcommand("table", "Reproduce d-table or f-table");
    table->add_option("name", table_name, "d-table or f-table")->required();

    auto* scan_cmd = app.add_subcommand("scan", "Scan all weights with entries up to --max");
    scan_cmd->add_option("--n", scan_n, "Weight length")->required();
    scan_cmd->add_option("--max", scan_max, "Largest entry")->required();
    scan_cmd->add_option("--filter", filter_name, "all, in-class, resonance-free, both or disagree");
    scan_cmd->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            err << "error: cannot open " << out_path << '\n';
            return kInvalidInput;
        }
        sink = &file;
    }

    const auto start = std::chrono::steady_clock::now();
    auto elapsed_ms = [&] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    };

    try {
        Format format = format_name.empty() ? Format::text : parse_format(format_name);
        const Backend backend = parse_backend(backend_name);
        const std::string command = app.get_subcommands().front()->get_name();

        if (scan_cmd->parsed()) {
            ScanOptions options;
            options.n = scan_n;
            options.max_weight = scan_max;
            options.filter = parse_scan_filter(filter_name);
            options.threads = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
            if (format == Format::text) format = Format::csv;

            json rows = json::array();
            if (format == Format::csv) *sink << "weight,in_class,witnesses,failure,resonances,iset_sizes\n";
            const ScanSummary summary = scan(options, [&](const ScanRow& row) {
                if (format == Format::csv) {
                    *sink << scan_row_csv(row) << '\n';
                } else {
                    rows.push_back(scan_row_json(row));
                }
            });
            if (format == Format::json) {
                json envelope = {{"command", "scan"},
                                 {"backend", "apery"},
                                 {"input", {{"n", scan_n}, {"max", scan_max}, {"filter", filter_name}}},
                                 {"result", {{"rows", rows}, {"visited", summary.visited}, {"emitted", summary.emitted}}}};
                if (!no_timing) envelope["elapsed_ms"] = elapsed_ms();
                *sink << envelope.dump(2) << '\n';
            }
            if (options.filter == ScanFilter::disagree && summary.emitted > 0) {
                err << "error: " << summary.emitted << " in-class weight(s) carry resonances\n";
                return kOracleMismatch;
            }
            return kSuccess;
        }

        if (format == Format::csv) {
            throw ValidationError("csv output is only available for scan");
        }

        Outcome outcome;
        if (classify->parsed()) outcome = do_classify(values);
        else if (criteria->parsed()) outcome = do_criteria(values);
        else if (iset->parsed()) outcome = do_iset(values, window_index, backend);
        else if (reson->parsed()) outcome = do_resonances(values);
        else if (enumerate->parsed()) outcome = do_enumerate(values, window_index, backend);
        else if (count->parsed()) outcome = do_count(m1, m2, backend);
        else if (table->parsed()) outcome = do_table(table_name);

        if (format == Format::json) {
            json envelope = {{"command", command},
                             {"backend", outcome.backend},
                             {"input", outcome.input},
                             {"result", outcome.result}};
            if (!no_timing) envelope["elapsed_ms"] = elapsed_ms();
            *sink << envelope.dump(2) << '\n';
        } else {
            *sink << outcome.text;
        }
        if (outcome.code == kOracleMismatch) err << "error: closed form disagrees with enumeration\n";
        return outcome.code;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const OracleMismatch& e) {
        err << "internal error: " << e.what() << '\n';
        return kOracleMismatch;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
}

}  // namespace qcw::cli
