/*
   Copyright 2026 The zprconv authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "zpr/convcode.hpp"
#include "zpr/distances.hpp"
#include "zpr/matrix_io.hpp"

namespace {

using nlohmann::json;

struct Input {
    std::string path;
    std::string digest;
    zpr::MatrixFile file;
};

Input load_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw zpr::Error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string raw = buffer.str();
    zpr::MatrixFile file = zpr::parse_matrix_file(raw);
    return Input{path, zpr::content_digest(raw), std::move(file)};
}

json matrix_json(const zpr::PolyMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(zpr::to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json base_report(const std::string& command, const Input& input) {
    return json{{"command", command},
                {"input",
                 {{"path", input.path},
                  {"digest", input.digest},
                  {"p", input.file.ring.p()},
                  {"r", input.file.ring.r()},
                  {"modulus", input.file.ring.modulus()},
                  {"k", input.file.matrix.rows()},
                  {"n", input.file.matrix.cols()}}},
                {"results", json::object()},
                {"warnings", json::array()}};
}

void emit(const json& report, bool as_json) {
    if (as_json) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::cout << "command: " << report["command"].get<std::string>() << "\n";
    const auto& in = report["input"];
    std::cout << "input: " << in["path"].get<std::string>() << "  Z_" << in["modulus"]
              << " (p=" << in["p"] << ", r=" << in["r"] << ")  " << in["k"] << "x" << in["n"]
              << "\n";
    std::function<void(const std::string&, const json&, int)> walk =
        [&](const std::string& key, const json& value, int depth) {
            std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
            if (value.is_object()) {
                std::cout << pad << key << ":\n";
                for (auto it = value.begin(); it != value.end(); ++it) {
                    walk(it.key(), it.value(), depth + 1);
                }
            } else if (value.is_array() && !value.empty() && value[0].is_array()) {
                std::cout << pad << key << ":\n";
                for (const auto& row : value) {
                    std::cout << pad << "  [";
                    for (std::size_t i = 0; i < row.size(); ++i) {
                        std::cout << (i ? ", " : "") << row[i].get<std::string>();
                    }
                    std::cout << "]\n";
                }
            } else if (value.is_array() && !value.empty() && value[0].is_object()) {
                std::cout << pad << key << ":\n";
                for (const auto& item : value) {
                    std::cout << pad << " ";
                    for (auto it = item.begin(); it != item.end(); ++it) {
                        std::cout << " " << it.key() << "=" << it.value().dump();
                    }
                    std::cout << "\n";
                }
            } else {
                std::cout << pad << key << ": " << value.dump() << "\n";
            }
        };
    for (auto it = report["results"].begin(); it != report["results"].end(); ++it) {
        walk(it.key(), it.value(), 0);
    }
    for (const auto& w : report["warnings"]) {
        std::cout << "warning: " << w.get<std::string>() << "\n";
    }
}

const char* lfp_name(zpr::LfpOutcome outcome) {
    switch (outcome) {
        case zpr::LfpOutcome::implied_by_lzp:
            return "implied_by_lzp";
        case zpr::LfpOutcome::factor_found:
            return "factor_found";
        case zpr::LfpOutcome::no_factor_up_to_bound:
            return "no_factor_up_to_bound";
    }
    return "unknown";
}

int cmd_analyze(const std::string& path, int deg_bound, bool as_json) {
    Input input = load_input(path);
    json report = base_report("analyze --deg-bound " + std::to_string(deg_bound), input);
    zpr::PrimenessReport pr = zpr::analyze(input.file.matrix, deg_bound);
    json lfp{{"outcome", lfp_name(pr.lfp.outcome)}, {"deg_bound", pr.lfp.degree_bound}};
    if (pr.lfp.factor) {
        lfp["factor"] = matrix_json(*pr.lfp.factor);
        lfp["cofactor"] = matrix_json(*pr.lfp.cofactor);
    }
    report["results"]["is_lzp"] = pr.is_lzp;
    report["results"]["field_gcd"] = zpr::to_string(pr.field_gcd);
    if (pr.lzp_certificate) {
        report["results"]["right_inverse"] = matrix_json(*pr.lzp_certificate);
    }
    report["results"]["lfp"] = std::move(lfp);
    if (pr.lfp.outcome == zpr::LfpOutcome::no_factor_up_to_bound) {
        report["warnings"].push_back("left-factor search inconclusive up to degree bound " +
                                     std::to_string(pr.lfp.degree_bound));
    }
    try {
        zpr::ConvCode code(input.file.matrix);
        report["results"]["code"] = {{"admitted", true},
                                     {"noncatastrophic", code.noncatastrophic()},
                                     {"b_degree", code.b_degree()}};
    } catch (const zpr::NotFullRowRank&) {
        report["results"]["code"] = {{"admitted", false}};
        report["warnings"].push_back("projection loses row rank; not admissible as an encoder");
    }
    emit(report, as_json);
    return 0;
}

int cmd_distance(const std::string& path, bool want_free, std::optional<int> column_j,
                 bool want_mdp, std::optional<int> max_j_flag, bool as_json) {
    Input input = load_input(path);
    std::string echo = "distance";
    if (want_free) echo += " --free";
    if (column_j) echo += " --column " + std::to_string(*column_j);
    if (want_mdp) echo += " --mdp";
    if (max_j_flag) echo += " --max-j " + std::to_string(*max_j_flag);
    json report = base_report(echo, input);
    zpr::ConvCode code(input.file.matrix);
    bool all = !want_free && !column_j && !want_mdp;

    report["results"]["b_degree"] = code.b_degree();
    report["results"]["noncatastrophic"] = code.noncatastrophic();
    report["results"]["singleton_bound"] = zpr::singleton_bound(code);

    if (want_free || all) {
        zpr::FreeDistanceResult fd = zpr::free_distance(code);
        report["results"]["d_free"] = {{"value", fd.value},
                                       {"lower_bound_only", fd.lower_bound_only}};
        report["results"]["is_mds"] = fd.value == zpr::singleton_bound(code);
        if (fd.lower_bound_only) {
            report["warnings"].push_back(
                "free distance from bounded enumeration (catastrophic encoder); not certified "
                "exact");
        }
    }
    if (column_j || max_j_flag || all) {
        int max_j = zpr::L_index(code);
        if (column_j) max_j = *column_j;
        if (max_j_flag) max_j = *max_j_flag;
        json columns = json::array();
        for (int j = 0; j <= max_j; ++j) {
            int d = zpr::column_distance(code, j);
            int bound = zpr::column_distance_bound(code, j);
            columns.push_back(
                {{"j", j}, {"distance", d}, {"bound", bound}, {"meets_bound", d == bound}});
        }
        report["results"]["L"] = zpr::L_index(code);
        report["results"]["column"] = std::move(columns);
    }
    if (want_mdp || all) {
        report["results"]["L"] = zpr::L_index(code);
        report["results"]["is_mdp"] = zpr::is_mdp(code);
    }
    emit(report, as_json);
    return 0;
}

int cmd_paritycheck(const std::string& path, bool as_json) {
    Input input = load_input(path);
    json report = base_report("paritycheck", input);
    zpr::ConvCode code(input.file.matrix);
    const zpr::PolyMatrix& h = code.parity_check();
    report["results"]["parity_check"] = matrix_json(h);
    report["results"]["verified"] = true;  // admission multiplies G*H back to zero
    emit(report, as_json);
    return 0;
}

std::pair<std::int64_t, int> parse_target(const std::string& text) {
    std::int64_t p = 0;
    int r = 0;
    auto caret = text.find('^');
    try {
        if (caret != std::string::npos) {
            p = std::stoll(text.substr(0, caret));
            r = std::stoi(text.substr(caret + 1));
        } else {
            std::int64_t m = std::stoll(text);
            if (m < 2) throw std::invalid_argument("modulus");
            std::int64_t q = 2;
            while (q * q <= m && m % q != 0) ++q;
            p = (q * q <= m) ? q : m;
            std::int64_t x = m;
            while (x % p == 0) {
                x /= p;
                ++r;
            }
            if (x != 1) throw std::invalid_argument("not a prime power");
        }
    } catch (const std::exception&) {
        throw zpr::ParseError("--to expects a prime power (e.g. 4 or 2^2)", 1, 1);
    }
    return {p, r};
}

int cmd_lift(const std::string& path, const std::string& target_text,
             const std::optional<std::string>& out_path, bool as_json) {
    Input input = load_input(path);
    json report = base_report("lift --to " + target_text, input);
    auto [p, r] = parse_target(target_text);
    zpr::RingSpec target(p, r);
    zpr::ConvCode lifted = zpr::lift_code(input.file.matrix, target);
    std::string text = zpr::format_matrix_file(lifted.generator());
    report["results"]["target"] = {{"p", target.p()}, {"r", target.r()},
                                   {"modulus", target.modulus()}};
    report["results"]["matrix_file"] = text;
    report["results"]["noncatastrophic"] = lifted.noncatastrophic();
    report["results"]["b_degree"] = lifted.b_degree();
    if (out_path) {
        std::ofstream out(*out_path, std::ios::binary);
        if (!out) throw zpr::Error("cannot write " + *out_path);
        out << text;
        report["results"]["written_to"] = *out_path;
        emit(report, as_json);
    } else if (as_json) {
        emit(report, true);
    } else {
        std::cout << text;
    }
    return 0;
}

int cmd_demo(const std::string& path, int horizon, bool as_json) {
    Input input = load_input(path);
    json report = base_report("demo-catastrophic --horizon " + std::to_string(horizon), input);
    zpr::ConvCode code(input.file.matrix);
    zpr::CatastrophicDemo demo = zpr::catastrophic_demo(code, horizon);
    json outputs = json::array();
    for (const auto& s : demo.output) outputs.push_back(zpr::to_string(s));
    report["results"]["horizon"] = horizon;
    report["results"]["projection_gcd"] = zpr::to_string(demo.projection_gcd);
    report["results"]["input"] = zpr::to_string(demo.input);
    report["results"]["input_weight"] = demo.input_weight;
    report["results"]["output"] = std::move(outputs);
    report["results"]["output_weight"] = demo.output_weight;
    report["results"]["output_max_degree"] = demo.output_max_degree;
    emit(report, as_json);
    if (!as_json) {
        std::cout << "degree | input weight | output weight\n";
        for (int t = 0; t <= horizon; ++t) {
            int iw = demo.input.coeff(t) != 0 ? 1 : 0;
            int ow = 0;
            for (const auto& s : demo.output) ow += (s.coeff(t) != 0);
            std::cout << t << " | " << iw << " | " << ow << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of convolutional codes over Z_{p^r}"};
    app.require_subcommand(1);

    std::string file;
    bool as_json = false;
    int deg_bound = 2;
    int horizon = 8;
    bool want_free = false, want_mdp = false;
    std::optional<int> column_j, max_j;
    std::string target;
    std::optional<std::string> out_path;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", file, "matrix file")->required();
        sub->add_flag("--json", as_json, "machine-readable report");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "primeness and encoder admissibility");
    add_common(analyze);
    analyze->add_option("--deg-bound", deg_bound, "left-factor search degree bound");

    CLI::App* distance = app.add_subcommand("distance", "free and column distances");
    add_common(distance);
    distance->add_flag("--free", want_free, "free distance only");
    distance->add_option("--column", column_j, "column distances up to this j");
    distance->add_flag("--mdp", want_mdp, "distance-profile verdict");
    distance->add_option("--max-j", max_j, "largest column index");

    CLI::App* parity = app.add_subcommand("paritycheck", "kernel representation");
    add_common(parity);

    CLI::App* lift = app.add_subcommand("lift", "embed a field encoder into Z_{p^r}");
    add_common(lift);
    lift->add_option("--to", target, "target ring, e.g. 4 or 2^2")->required();
    std::string out_buffer;
    CLI::Option* out_opt = lift->add_option("--out", out_buffer, "write the lifted file here");

    CLI::App* demo = app.add_subcommand("demo-catastrophic", "infinite-to-finite weight witness");
    add_common(demo);
    demo->add_option("--horizon", horizon, "series truncation horizon");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (out_opt->count() > 0) out_path = out_buffer;

    try {
        if (analyze->parsed()) return cmd_analyze(file, deg_bound, as_json);
        if (distance->parsed()) {
            return cmd_distance(file, want_free, column_j, want_mdp, max_j, as_json);
        }
        if (parity->parsed()) return cmd_paritycheck(file, as_json);
        if (lift->parsed()) return cmd_lift(file, target, out_path, as_json);
        if (demo->parsed()) return cmd_demo(file, horizon, as_json);
    } catch (const zpr::ParseError& e) {
        std::cerr << "parse error at " << e.line << ":" << e.col << ": " << e.what() << "\n";
        return 2;
    } catch (const zpr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
