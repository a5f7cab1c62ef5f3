#include "equisub/cli.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>

namespace equisub::cli {

using nlohmann::ordered_json;

namespace {

bool is_integer_token(std::string_view tok) {
    std::size_t start = (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) ? 1 : 0;
    if (start == tok.size()) return false;
    for (std::size_t i = start; i < tok.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    }
    return true;
}

std::string str(const BigInt& v) { return v.get_str(); }

ordered_json index_list(const std::vector<std::size_t>& indices) {
    ordered_json arr = ordered_json::array();
    for (auto i : indices) arr.push_back(i);
    return arr;
}

ordered_json term_list(const IntSequence& seq) {
    ordered_json arr = ordered_json::array();
    for (const auto& t : seq) arr.push_back(str(t.value));
    return arr;
}

ordered_json envelope(std::string_view command, std::int64_t modulus) {
    ordered_json doc;
    doc["schema_version"] = schema_version;
    doc["command"] = command;
    doc["modulus"] = modulus;
    return doc;
}

void merge(ordered_json& doc, const ordered_json& payload) {
    for (const auto& [key, value] : payload.items()) doc[key] = value;
}

IntSequence read_input(const CommandConfig& config, std::istream& in) {
    if (!config.input_path) return parse_sequence(in);
    std::ifstream file(*config.input_path);
    if (!file) throw ParseError("cannot open input file " + *config.input_path);
    return parse_sequence(file);
}

void emit(const CommandConfig& config, const ordered_json& doc, std::string_view text,
          std::ostream& out) {
    if (config.output == OutputFormat::json) {
        out << doc.dump(2) << '\n';
    } else {
        out << text;
    }
}

int run_extract(const CommandConfig& config, std::istream& in, std::ostream& out) {
    const OddModulus n(config.modulus);
    const IntSequence seq = read_input(config, in);
    const EquitableCertificate cert = extract_equitable(seq, n);

    ordered_json doc = envelope("extract", n.value());
    doc["input_length"] = seq.size();
    merge(doc, to_json(cert));

    std::ostringstream text;
    text << "equitable subsequence of length " << cert.length() << " from " << seq.size()
         << " terms (N = " << n.value() << ")\n"
         << "indices:";
    for (auto i : cert.selected_indices) text << ' ' << i;
    text << "\nzero-sum subsets (empty included): " << str(cert.zero_count) << '\n'
         << "threshold N*count >= 2^L: " << (cert.threshold_met ? "met" : "not met") << '\n';
    emit(config, doc, text.str(), out);
    return 0;
}

int run_count(const CommandConfig& config, std::istream& in, std::ostream& out) {
    const Modulus n(config.modulus);
    const IntSequence seq = read_input(config, in);
    const CountReport report = count_by_residue(seq, n);
    BigInt zero = report.counts[0];
    if (!config.include_empty) zero -= 1;
    const bool threshold = meets_threshold(zero, seq.size(), n);

    ordered_json doc = envelope("count", n.value());
    merge(doc, to_json(report));
    doc["include_empty"] = config.include_empty;
    doc["zero_count"] = str(zero);
    doc["threshold_met"] = threshold;

    std::ostringstream text;
    text << "L = " << seq.size() << ", N = " << n.value() << '\n';
    for (std::size_t r = 0; r < report.counts.size(); ++r) {
        text << "  residue " << r << ": " << str(report.counts[r]) << '\n';
    }
    text << "zero-sum subsets (" << (config.include_empty ? "empty included" : "nonempty")
         << "): " << str(zero) << '\n'
         << "threshold N*count >= 2^L: " << (threshold ? "met" : "not met") << '\n';
    emit(config, doc, text.str(), out);
    return 0;
}

int run_verify(const CommandConfig& config, std::istream& in, std::ostream& out) {
    const OddModulus n(config.modulus);
    const IntSequence seq = read_input(config, in);
    const PropertyReport report = verify_equitable(seq, n);
    const BigInt zero = count_zero(seq, n, EmptySubset::include);
    const bool threshold = meets_threshold(zero, seq.size(), n);
    const bool equitable = report.all_ok() && threshold;

    ordered_json doc = envelope("verify", n.value());
    doc["report"] = to_json(report);
    doc["zero_count"] = str(zero);
    doc["threshold_met"] = threshold;
    doc["equitable"] = equitable;

    std::ostringstream text;
    text << "L = " << report.length << ", N = " << n.value() << '\n'
         << "a) even +/- classes: " << (report.even_classes_ok ? "yes" : "no") << '\n'
         << "b) L > N: " << (report.length_ok ? "yes" : "no") << '\n'
         << "c) sum = 0 mod 2N: " << (report.zero_sum_mod_2n_ok ? "yes" : "no") << '\n'
         << "zero-sum subsets (empty included): " << str(zero) << '\n'
         << "equitable: " << (equitable ? "yes" : "no") << '\n';
    emit(config, doc, text.str(), out);
    return equitable ? 0 : 1;
}

int run_search(const CommandConfig& config, std::ostream& out) {
    const Modulus n(config.modulus);
    SearchOptions options;
    options.mode = config.mode;
    options.budget = config.budget;
    options.seed = config.seed;
    options.threads = config.threads;
    const ConjectureReport report = search_conjecture(n, options);
    const auto counterexamples = report.counterexamples();

    ordered_json doc = envelope("search", n.value());
    merge(doc, to_json(report));

    std::ostringstream text;
    text << to_string(config.mode) << " search, N = " << n.value() << ", length "
         << report.sequence_length << ": " << report.instances_checked()
         << " instances checked, " << counterexamples.size() << " counterexamples\n";
    for (const auto& c : counterexamples) {
        text << "  counterexample:";
        for (auto r : c.residues) text << ' ' << r;
        text << '\n';
    }
    emit(config, doc, text.str(), out);
    return search_exit_code(report);
}

}  // namespace

IntSequence parse_sequence(std::istream& in) {
    std::vector<BigInt> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r\f\v");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream tokens(line);
        std::string tok;
        while (tokens >> tok) {
            if (!is_integer_token(tok)) {
                throw ParseError("line " + std::to_string(line_no) + ": '" + tok +
                                 "' is not a decimal integer");
            }
            values.emplace_back(tok[0] == '+' ? tok.substr(1) : tok, 10);
        }
    }
    return IntSequence(std::move(values));
}

ordered_json to_json(const PropertyReport& report) {
    ordered_json j;
    j["L"] = report.length;
    j["even_classes_ok"] = report.even_classes_ok;
    j["length_ok"] = report.length_ok;
    j["zero_sum_mod_2n_ok"] = report.zero_sum_mod_2n_ok;
    j["sum_mod_2n"] = report.sum_mod_2n.value;
    ordered_json classes = ordered_json::array();
    for (const auto& [rep, count] : report.class_multiplicities) {
        classes.push_back({{"class", rep}, {"count", count}});
    }
    j["class_multiplicities"] = std::move(classes);
    return j;
}

ordered_json to_json(const EquitableCertificate& cert) {
    ordered_json j;
    j["L"] = cert.length();
    j["selected_indices"] = index_list(cert.selected_indices);
    j["selected_terms"] = term_list(cert.selected);
    j["zero_count"] = str(cert.zero_count);
    j["threshold_met"] = cert.threshold_met;
    j["properties"] = to_json(cert.report);

    const PairedSequence& p = cert.pairing_trace;
    ordered_json pairs = ordered_json::array();
    for (const auto& pair : p.pairs) {
        pairs.push_back({{"i", pair.first}, {"j", pair.second}, {"c", str(pair.sum)}});
    }
    ordered_json pairing;
    pairing["T"] = p.size();
    pairing["V"] = p.zero_class_start;
    pairing["pairs"] = std::move(pairs);
    pairing["leftovers"] = index_list(p.leftovers);
    pairing["leftovers_within_n"] = p.within_n_leftovers();
    j["pairing"] = std::move(pairing);

    ordered_json c_union;
    c_union["pair_positions"] = index_list(cert.c_union.indices);
    c_union["sum"] = str(cert.c_union.sum);
    j["c_union"] = std::move(c_union);
    return j;
}

ordered_json to_json(const CountReport& report) {
    ordered_json j;
    j["L"] = report.length;
    ordered_json counts = ordered_json::array();
    for (const auto& c : report.counts) counts.push_back(str(c));
    j["counts"] = std::move(counts);
    return j;
}

ordered_json to_json(const ConjectureReport& report) {
    ordered_json j;
    j["mode"] = to_string(report.options.mode);
    j["sequence_length"] = report.sequence_length;
    if (report.options.mode == SearchMode::random) {
        j["budget"] = report.options.budget;
        j["seed"] = report.options.seed;
    }
    j["instances_checked"] = report.instances_checked();

    ordered_json counterexamples = ordered_json::array();
    ordered_json witnesses = ordered_json::array();
    for (const auto& r : report.results) {
        if (!r.witness) {
            counterexamples.push_back({{"residues", r.instance.residues}});
            continue;
        }
        ordered_json w;
        w["residues"] = r.instance.residues;
        w["indices"] = index_list(r.witness->indices);
        w["L"] = r.witness->length();
        w["zero_count"] = str(r.witness->zero_count);
        if (r.witness->brute_force_agrees) w["brute_force_agrees"] = *r.witness->brute_force_agrees;
        witnesses.push_back(std::move(w));
    }
    j["counterexamples"] = std::move(counterexamples);
    j["witnesses"] = std::move(witnesses);
    return j;
}

int search_exit_code(const ConjectureReport& report) {
    for (const auto& r : report.results) {
        if (!r.witness) return 1;
    }
    return 0;
}

int run(const CommandConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        switch (config.command) {
            case Command::extract: return run_extract(config, in, out);
            case Command::count: return run_count(config, in, out);
            case Command::verify: return run_verify(config, in, out);
            case Command::search: return run_search(config, out);
        }
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Equitable zero-sum subsequence extraction and verification"};
    app.require_subcommand(1);

    CommandConfig config;
    std::string output = "json";
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-n,--modulus", config.modulus, "Modulus N")->required();
        sub->add_option("-o,--output", output, "Output format")
            ->check(CLI::IsMember({"json", "text"}));
    };
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("-i,--input", config.input_path, "Input file (default: stdin)");
    };

    auto* extract = app.add_subcommand("extract", "Extract an equitable subsequence (odd N >= 3, at least 4N terms)");
    add_common(extract);
    add_input(extract);

    auto* count = app.add_subcommand("count", "Count subsets by sum residue mod N");
    add_common(count);
    add_input(count);
    bool exclude_empty = false;
    count->add_flag("--exclude-empty", exclude_empty, "Do not count the empty subset");

    auto* verify = app.add_subcommand("verify", "Check whether the input sequence is equitable (odd N >= 3)");
    add_common(verify);
    add_input(verify);

    auto* search = app.add_subcommand("search", "Search for counterexamples among length-2N sequences");
    add_common(search);
    std::string mode = "exhaustive";
    search->add_option("--mode", mode, "exhaustive or random")
        ->check(CLI::IsMember({"exhaustive", "random"}));
    search->add_option("--budget", config.budget, "Random instances to sample");
    search->add_option("--seed", config.seed, "Random seed");
    search->add_option("--threads", config.threads, "Worker threads")->check(CLI::Range(1u, 256u));

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);  // --help
        err << "error: " << e.what() << '\n';
        return 2;
    }

    if (extract->parsed()) config.command = Command::extract;
    if (count->parsed()) config.command = Command::count;
    if (verify->parsed()) config.command = Command::verify;
    if (search->parsed()) config.command = Command::search;
    config.include_empty = !exclude_empty;
    config.mode = mode == "random" ? SearchMode::random : SearchMode::exhaustive;
    config.output = output == "text" ? OutputFormat::text : OutputFormat::json;
    return run(config, in, out, err);
}

}  // namespace equisub::cli
