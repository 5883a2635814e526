/**
 * Copyright 2026 The fock-cocycle authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "fock/json_io.hpp"

#include <cstdio>
#include <limits>

#include <nlohmann/json.hpp>

#include "fock/errors.hpp"

namespace fock {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string format_complex(const cplx& z) {
    return "[" + format_double(z.real()) + "," + format_double(z.imag()) + "]";
}

std::string serialize(const GroupElement& g) {
    std::string out = "{\"kind\":\"";
    out += g.kind() == GroupKind::Symplectic ? "Sp" : "SO";
    out += "\",\"m\":" + std::to_string(g.m()) + ",\"matrix\":[";
    const Mat& M = g.matrix();
    for (int i = 0; i < M.rows(); ++i) {
        out += i ? ",[" : "[";
        for (int j = 0; j < M.cols(); ++j) {
            if (j) out += ",";
            out += format_double(M(i, j));
        }
        out += "]";
    }
    out += "]}";
    return out;
}

GroupElement deserialize(const std::string& json_text, bool validate,
                         double membership_tol) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw SerializationError(std::string("deserialize: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind") || !j.contains("m") ||
        !j.contains("matrix")) {
        throw SerializationError("deserialize: missing kind/m/matrix");
    }
    const std::string kind_s = j["kind"].get<std::string>();
    GroupKind kind;
    if (kind_s == "Sp") {
        kind = GroupKind::Symplectic;
    } else if (kind_s == "SO") {
        kind = GroupKind::Orthogonal;
    } else {
        throw SerializationError("deserialize: kind must be \"Sp\" or \"SO\"");
    }
    const int m = j["m"].get<int>();
    if (m < 1) throw SerializationError("deserialize: m must be >= 1");
    const auto& rows = j["matrix"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != 2 * m) {
        throw SerializationError("deserialize: matrix must have 2m rows");
    }
    Mat M(2 * m, 2 * m);
    for (int i = 0; i < 2 * m; ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || static_cast<int>(row.size()) != 2 * m) {
            throw SerializationError("deserialize: matrix rows must have 2m entries");
        }
        for (int jj = 0; jj < 2 * m; ++jj) M(i, jj) = row[jj].get<double>();
    }
    const double tol =
        validate ? membership_tol : std::numeric_limits<double>::infinity();
    try {
        return GroupElement(kind, std::move(M), tol);
    } catch (const NotUnitary& e) {
        throw SerializationError(std::string("deserialize: ") + e.what());
    }
}

}  // namespace fock
