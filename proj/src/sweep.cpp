#include "mzi/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "mzi/fisher.hpp"
#include "mzi/moments.hpp"

namespace mzi {

SweepSpec::SweepSpec(Variable var, double a, double b, int n) : variable(var), start(a), stop(b), points(n) {
    if (!(a < b)) throw std::domain_error("SweepSpec: start must be < stop");
    if (n < 2 || n > 1000000) throw std::domain_error("SweepSpec: points must lie in [2, 1e6]");
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string to_csv(const Table& t) {
    std::string out;
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        if (c) out += ',';
        out += t.columns[c];
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            if (row[c]) out += fmt(*row[c]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Table& t) {
    std::string out = "[";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        out += r ? ",\n {" : "\n {";
        for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
            if (c) out += ", ";
            out += '"' + t.columns[c] + "\": ";
            out += t.rows[r][c] ? fmt(*t.rows[r][c]) : "null";
        }
        out += '}';
    }
    out += "\n]\n";
    return out;
}

Table parse_csv(const std::string& text) {
    Table t;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::size_t pos = 0;
        while (true) {
            const std::size_t comma = line.find(',', pos);
            fields.push_back(line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (header) {
            t.columns = fields;
            header = false;
            continue;
        }
        std::vector<std::optional<double>> row;
        for (const auto& f : fields) {
            if (f.empty())
                row.push_back(std::nullopt);
            else
                row.push_back(std::stod(f));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table run_qfi_at(const PortState& p0, const PortState& p1, const std::vector<double>& t_squared_values,
                 bool with_2p, bool with_i, bool with_ii) {
    const ModeMoments m0 = moments_of(p0);
    const ModeMoments m1 = moments_of(p1);
    Table t;
    t.columns.push_back("t_squared");
    if (with_2p) t.columns.push_back("f_2p");
    if (with_i) t.columns.push_back("f_i");
    if (with_ii) t.columns.push_back("f_ii");
    for (double x : t_squared_values) {
        const BeamSplitter bs(std::sqrt(std::min(1.0, std::max(0.0, x))));
        std::vector<std::optional<double>> row;
        row.emplace_back(x);
        if (with_2p) {
            try {
                row.emplace_back(qfi(m0, m1, bs, QfiMode::two_param));
            } catch (const std::domain_error&) {
                row.emplace_back(std::nullopt);
            }
        }
        if (with_i) row.emplace_back(qfi(m0, m1, bs, QfiMode::asym_single));
        if (with_ii) row.emplace_back(qfi(m0, m1, bs, QfiMode::sym_single));
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table run_qfi(const PortState& p0, const PortState& p1, const SweepSpec& sweep, bool with_2p, bool with_i,
              bool with_ii) {
    if (sweep.variable != SweepSpec::Variable::t_squared)
        throw std::domain_error("run_qfi: sweep variable must be t_squared");
    std::vector<double> xs;
    xs.reserve(sweep.points);
    for (int i = 0; i < sweep.points; ++i) xs.push_back(sweep.at(i));
    return run_qfi_at(p0, p1, xs, with_2p, with_i, with_ii);
}

Table run_sensitivity(const PortState& p0, const PortState& p1, const InterferometerConfig& cfg,
                      const DetectorConfig& det, const SweepSpec& sweep) {
    if (sweep.variable != SweepSpec::Variable::phi)
        throw std::domain_error("run_sensitivity: sweep variable must be phi");
    const ModeMoments m0 = moments_of(p0);
    const ModeMoments m1 = moments_of(p1);

    auto bound = [&](QfiMode mode) -> std::optional<double> {
        try {
            return qcrb(qfi(m0, m1, cfg.bs1, mode));
        } catch (const std::domain_error&) {
            return std::nullopt;
        }
    };
    const std::optional<double> q2p = bound(QfiMode::two_param);
    const std::optional<double> qi = bound(QfiMode::asym_single);
    const std::optional<double> qii = bound(QfiMode::sym_single);

    Table t;
    t.columns = {"phi", "delta_phi", "qcrb_2p", "qcrb_i", "qcrb_ii"};
    for (int i = 0; i < sweep.points; ++i) {
        const double phi = sweep.at(i);
        const SensitivityPoint p = det.kind == DetectorConfig::Kind::difference_intensity
                                       ? diff_intensity_point(m0, m1, cfg, phi)
                                       : homodyne_point(m0, m1, cfg, det, phi);
        std::vector<std::optional<double>> row;
        row.emplace_back(phi);
        if (std::isfinite(p.delta_phi))
            row.emplace_back(p.delta_phi);
        else
            row.emplace_back(std::nullopt);
        row.push_back(q2p);
        row.push_back(qi);
        row.push_back(qii);
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace mzi
