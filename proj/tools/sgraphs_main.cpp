// Copyright 2026 the sgraphs authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line surface: enumeration listings, graph exports, verification
// suites and preparation certificates. Exit codes: 0 all pass, 1 a
// verification counterexample or no path, 2 a configuration error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "sgr/enumeration.hpp"
#include "sgr/errors.hpp"
#include "sgr/serialize.hpp"
#include "sgr/suites.hpp"

namespace {

struct Options {
    int t = 0;
    int max_t = 7;
    int jobs = 0;
    std::string sector_text;
    std::string suite = "all";
    std::string format = "text";
    std::string out;
    std::string from_text;
    int to_label = 0;
    bool level_one = false;
};

void check_t(int t, int max_t) {
    if (t < 1 || t > max_t)
        throw sgr::ConfigError("t must be between 1 and " + std::to_string(max_t) +
                               " (see --max-t), got " + std::to_string(t));
    if (t > sgr::kMaxEnumerationT)
        throw sgr::ConfigError("t beyond " + std::to_string(sgr::kMaxEnumerationT) +
                               " is not supported");
}

sgr::Sector parse_sector(const Options& opt, bool required) {
    if (opt.sector_text.empty()) {
        if (required) throw sgr::ConfigError("this command needs --sector");
        return sgr::Sector{};
    }
    sgr::Sector sec = sgr::sector_from_text(opt.sector_text);
    if (opt.t != 0 && sec.t != opt.t)
        throw sgr::ConfigError("sector " + sgr::to_text(sec) + " has size " +
                               std::to_string(sec.t) + " but --t is " + std::to_string(opt.t));
    return sec;
}

void emit(const std::string& payload, const Options& opt) {
    if (opt.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) throw sgr::ConfigError("cannot open output file " + opt.out);
    file << payload;
}

std::string graph_payload(const sgr::LabeledGraph& g, const std::string& format) {
    if (format == "json") return sgr::graph_json(g).dump(2) + "\n";
    if (format == "dot") return sgr::to_dot(g);
    return sgr::graph_text(g);
}

int run(int argc, char** argv) {
    Options opt;
    CLI::App app{"diagram classes, link graphs, sector graphs and preparation certificates"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--max-t", opt.max_t, "largest accepted t")->capture_default_str();
    app.add_option("--jobs", opt.jobs, "worker threads, 0 picks the OpenMP default")
        ->capture_default_str();
    app.add_option("--out", opt.out, "write the payload to this file instead of stdout");

    auto* cmd_enumerate = app.add_subcommand("enumerate", "list all equivalence classes");
    cmd_enumerate->add_option("--t", opt.t, "diagram size")->required();
    cmd_enumerate->add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    auto* cmd_graph = app.add_subcommand("graph", "the graph of links, optionally one sector");
    cmd_graph->add_option("--t", opt.t, "diagram size")->required();
    cmd_graph->add_option("--sector", opt.sector_text, "restrict to one sector, e.g. \"2<1<3\"");
    cmd_graph->add_option("--format", opt.format, "text, json or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}))
        ->capture_default_str();

    auto* cmd_sgraph = app.add_subcommand("sgraph", "the fused sector graph of one sector");
    cmd_sgraph->add_option("--sector,--order", opt.sector_text, "sector, e.g. \"2<1<3\"")
        ->required();
    cmd_sgraph->add_option("--t", opt.t, "diagram size, inferred from the sector");
    cmd_sgraph->add_option("--format", opt.format, "text, json or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}))
        ->capture_default_str();

    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify->add_option("--t", opt.t, "diagram size")->required();
    cmd_verify->add_option("--suite", opt.suite,
                           "counts, properties, theorem85, preparation, duality, classfn, "
                           "sgraph-count or all")
        ->capture_default_str();
    cmd_verify->add_option("--sector", opt.sector_text, "restrict sector suites to one sector");
    cmd_verify->add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    auto* cmd_prepare = app.add_subcommand("prepare", "certificate for one class and target");
    cmd_prepare->add_option("--sector", opt.sector_text, "sector, e.g. \"2<1<3<4\"")->required();
    cmd_prepare->add_option("--from", opt.from_text, "heights of any class member, e.g. \"1,1,1,0,1\"")
        ->required();
    cmd_prepare->add_option("--t", opt.t, "diagram size, inferred from the sector");
    auto* k_option =
        cmd_prepare->add_option("--k", opt.to_label, "target vertex label in 1..t+1");
    cmd_prepare
        ->add_flag("--level-one", opt.level_one,
                   "use the direct walk for classes of height at most 1")
        ->excludes(k_option);
    cmd_prepare->add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*cmd_enumerate) {
        check_t(opt.t, opt.max_t);
        std::vector<sgr::ClassKey> classes = sgr::enumerate_classes(opt.t, opt.jobs);
        emit(opt.format == "json" ? sgr::classes_json(classes, opt.t).dump(2) + "\n"
                                  : sgr::classes_text(classes, opt.t),
             opt);
        return 0;
    }

    if (*cmd_graph) {
        check_t(opt.t, opt.max_t);
        sgr::LabeledGraph g = sgr::build_class_graph(opt.t, opt.jobs);
        if (!opt.sector_text.empty()) g = sgr::sector_subgraph(g, parse_sector(opt, true));
        emit(graph_payload(g, opt.format), opt);
        return 0;
    }

    if (*cmd_sgraph) {
        sgr::Sector sec = parse_sector(opt, true);
        check_t(sec.t, opt.max_t);
        sgr::LabeledGraph g = sgr::build_sgraph(sec);
        g.fns = sgr::propagated_fns(g);
        emit(graph_payload(g, opt.format), opt);
        return 0;
    }

    if (*cmd_verify) {
        check_t(opt.t, opt.max_t);
        std::optional<sgr::Sector> only;
        if (!opt.sector_text.empty()) only = parse_sector(opt, true);
        sgr::PropertyReport report = sgr::run_suite(opt.suite, opt.t, only, opt.jobs);
        emit(opt.format == "json" ? sgr::report_json(opt.suite, report).dump(2) + "\n"
                                  : sgr::report_text(report),
             opt);
        return report.all_pass() ? 0 : 1;
    }

    if (*cmd_prepare) {
        sgr::Sector sec = parse_sector(opt, true);
        check_t(sec.t, opt.max_t);
        sgr::ClassKey from = sgr::canonical_key(sgr::diagram_from_text(opt.from_text));
        if (from.t() != sec.t)
            throw sgr::ConfigError("--from has " + std::to_string(from.t() + 1) +
                                   " columns but the sector has size " + std::to_string(sec.t));
        sgr::SCertificate cert;
        if (opt.level_one) {
            cert = sgr::level_one_prepare(from, sec);
        } else {
            if (opt.to_label < 1 || opt.to_label > sec.t + 1)
                throw sgr::ConfigError("--k must be in 1.." + std::to_string(sec.t + 1));
            sgr::LabeledGraph g = sgr::build_class_graph(sec.t, opt.jobs);
            cert = sgr::prepare(g, sec, from, opt.to_label);
        }
        std::string why;
        sgr::internal_check(sgr::verify_certificate(cert, &why), "certificate must verify: " + why);
        emit(opt.format == "json" ? sgr::certificate_json(cert).dump(2) + "\n"
                                  : sgr::to_text(cert),
             opt);
        return 0;
    }

    throw sgr::ConfigError("no subcommand selected");
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const sgr::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const sgr::Precondition& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const sgr::NoPath& e) {
        std::cerr << "no path: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
