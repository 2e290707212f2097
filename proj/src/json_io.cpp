#include <cmath>
#include <cstdio>

#include "kelly/errors.hpp"
#include "kelly/io.hpp"

namespace kelly {

namespace {

using nlohmann::ordered_json;

Eigen::VectorXd vector_from_json(const nlohmann::json& node,
                                 const std::string& name) {
    if (!node.is_array()) {
        throw ParseError("params JSON: '" + name + "' must be an array");
    }
    Eigen::VectorXd out(node.size());
    for (std::size_t i = 0; i < node.size(); ++i) {
        if (!node[i].is_number()) {
            throw ParseError("params JSON: '" + name +
                             "' must contain numbers");
        }
        out(static_cast<Eigen::Index>(i)) = node[i].get<double>();
    }
    return out;
}

Eigen::MatrixXd matrix_from_json(const nlohmann::json& node,
                                 const std::string& name) {
    if (!node.is_array() || node.empty()) {
        throw ParseError("params JSON: '" + name +
                         "' must be a non-empty array of rows");
    }
    const std::size_t rows = node.size();
    const std::size_t cols = node[0].is_array() ? node[0].size() : 0;
    Eigen::MatrixXd out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!node[i].is_array() || node[i].size() != cols) {
            throw ParseError("params JSON: '" + name +
                             "' rows have inconsistent lengths");
        }
        for (std::size_t j = 0; j < cols; ++j) {
            if (!node[i][j].is_number()) {
                throw ParseError("params JSON: '" + name +
                                 "' must contain numbers");
            }
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                node[i][j].get<double>();
        }
    }
    return out;
}

ordered_json vector_to_json(const Eigen::VectorXd& v) {
    ordered_json out = ordered_json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

ordered_json matrix_to_json(const Eigen::MatrixXd& m) {
    ordered_json out = ordered_json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        out.push_back(std::move(row));
    }
    return out;
}

void check_cov_consistency(const GbmParams& params,
                           const Eigen::MatrixXd& cov) {
    if (cov.rows() != params.size() || cov.cols() != params.size()) {
        throw ParseError("params JSON: 'cov' dimensions do not match 'mu'");
    }
    for (Eigen::Index i = 0; i < cov.rows(); ++i) {
        for (Eigen::Index j = 0; j < cov.cols(); ++j) {
            const double got = params.cov()(i, j);
            const double want = cov(i, j);
            const double scale = std::max(
                {std::abs(got), std::abs(want), 1e-300});
            if (std::abs(got - want) > 1e-12 * scale) {
                throw ParseError(
                    "params JSON: 'cov' disagrees with diag(sigma) * corr * "
                    "diag(sigma) beyond 1e-12 relative error");
            }
        }
    }
}

void dump_node(const ordered_json& node, std::string& out, int indent,
               int depth) {
    const std::string pad(static_cast<std::size_t>(indent) *
                              static_cast<std::size_t>(depth),
                          ' ');
    const std::string pad_in(static_cast<std::size_t>(indent) *
                                 static_cast<std::size_t>(depth + 1),
                             ' ');
    switch (node.type()) {
        case nlohmann::json::value_t::object: {
            if (node.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            std::size_t i = 0;
            for (const auto& [key, value] : node.items()) {
                out += pad_in + ordered_json(key).dump() + ": ";
                dump_node(value, out, indent, depth + 1);
                if (++i != node.size()) out += ",";
                out += "\n";
            }
            out += pad + "}";
            return;
        }
        case nlohmann::json::value_t::array: {
            if (node.empty()) {
                out += "[]";
                return;
            }
            // Scalar-only arrays print inline; nested ones get one row per
            // line, which keeps matrices readable.
            bool scalars_only = true;
            for (const auto& v : node) {
                if (v.is_array() || v.is_object()) {
                    scalars_only = false;
                    break;
                }
            }
            if (scalars_only) {
                out += "[";
                for (std::size_t i = 0; i < node.size(); ++i) {
                    if (i) out += ", ";
                    dump_node(node[i], out, indent, depth);
                }
                out += "]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < node.size(); ++i) {
                out += pad_in;
                dump_node(node[i], out, indent, depth + 1);
                if (i + 1 != node.size()) out += ",";
                out += "\n";
            }
            out += pad + "]";
            return;
        }
        case nlohmann::json::value_t::number_float:
            out += format_double_17(node.get<double>());
            return;
        default:
            out += node.dump();
            return;
    }
}

}  // namespace

std::string format_double_17(double value) {
    if (!std::isfinite(value)) {
        // JSON has no inf/nan literal; artifacts must never contain them.
        throw NumericError("cannot serialize non-finite number");
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string dump_json_17(const nlohmann::ordered_json& doc, int indent) {
    std::string out;
    dump_node(doc, out, indent, 0);
    out += "\n";
    return out;
}

nlohmann::ordered_json params_to_json(const GbmParams& params,
                                      const std::vector<std::string>& ids) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["kind"] = "gbm_params";
    if (!ids.empty()) {
        if (ids.size() != static_cast<std::size_t>(params.size())) {
            throw std::invalid_argument(
                "instrument id count does not match parameter dimension");
        }
        doc["instrument_ids"] = ids;
    }
    doc["mu"] = vector_to_json(params.mu());
    doc["sigma"] = vector_to_json(params.sigma());
    doc["corr"] = matrix_to_json(params.corr());
    doc["cov"] = matrix_to_json(params.cov());
    return doc;
}

GbmParams params_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("mu")) {
        throw ParseError("params JSON: expected an object with a 'mu' array");
    }
    try {
        const Eigen::VectorXd mu = vector_from_json(doc["mu"], "mu");
        const bool has_vol_corr = doc.contains("sigma") && doc.contains("corr");
        if (has_vol_corr) {
            GbmParams params(mu, vector_from_json(doc["sigma"], "sigma"),
                             matrix_from_json(doc["corr"], "corr"));
            if (doc.contains("cov")) {
                check_cov_consistency(params,
                                      matrix_from_json(doc["cov"], "cov"));
            }
            return params;
        }
        if (!doc.contains("cov")) {
            throw ParseError(
                "params JSON: need either ('sigma' and 'corr') or 'cov'");
        }
        return GbmParams::from_covariance(mu,
                                          matrix_from_json(doc["cov"], "cov"));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("params JSON: ") + e.what());
    }
}

std::vector<std::string> instrument_ids_from_json(const nlohmann::json& doc) {
    std::vector<std::string> ids;
    if (doc.is_object() && doc.contains("instrument_ids")) {
        for (const auto& id : doc["instrument_ids"]) {
            if (!id.is_string()) {
                throw ParseError("params JSON: instrument_ids must be strings");
            }
            ids.push_back(id.get<std::string>());
        }
    }
    return ids;
}

}  // namespace kelly
