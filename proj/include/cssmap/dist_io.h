// Copyright 2026 The cssmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CSSMAP_DIST_IO_H
#define CSSMAP_DIST_IO_H

#include <fstream>
#include <sstream>
#include <string>

#include "cssmap/error.h"
#include "cssmap/sector_distribution.h"
#include "json.hpp"

namespace cssmap {

inline const char *mode_name(DistMode mode) {
    switch (mode) {
        case DistMode::factorized_x:
            return "factorized-x";
        case DistMode::factorized_z:
            return "factorized-z";
        case DistMode::joint:
            return "joint";
        default:
            return "marginal";
    }
}

/// JSON form of a sector distribution. Keys are hex strings of the packed
/// sector index; only nonzero entries are written.
inline nlohmann::ordered_json dist_to_json(const SectorDistribution &dist) {
    nlohmann::ordered_json j;
    j["format"] = "cssmap-sector-distribution-v1";
    j["code_hash"] = dist.code_hash();
    j["mode"] = mode_name(dist.mode());
    j["k"] = dist.k();
    nlohmann::ordered_json fields = nlohmann::ordered_json::array();
    nlohmann::ordered_json widths = nlohmann::ordered_json::object();
    for (size_t g = 0; g < 4; g++) {
        Field f = (Field)g;
        widths[field_name(f)] = dist.layout().widths[f];
        if (dist.fields().has(f)) {
            fields.push_back(field_name(f));
        }
    }
    j["fields"] = fields;
    j["widths"] = widths;
    j["noise"] = dist.noise();
    nlohmann::ordered_json table = nlohmann::ordered_json::object();
    size_t w = dist.layout().total_width();
    for (uint64_t i = 0; i < dist.size(); i++) {
        if (dist[i] != 0) {
            table[sector_hex(i, w)] = dist[i];
        }
    }
    j["table"] = table;
    return j;
}

inline SectorDistribution dist_from_json(const nlohmann::json &j) {
    try {
        if (j.at("format").get<std::string>() != "cssmap-sector-distribution-v1") {
            throw ParseError(0, "unknown distribution format");
        }
        SectorWidths widths;
        FieldSet fields;
        for (size_t g = 0; g < 4; g++) {
            Field f = (Field)g;
            widths.bits[g] = j.at("widths").at(field_name(f)).get<size_t>();
        }
        for (const auto &name : j.at("fields")) {
            std::string s = name.get<std::string>();
            bool found = false;
            for (size_t g = 0; g < 4; g++) {
                if (s == field_name((Field)g)) {
                    fields = FieldSet::from_mask(fields.mask() | (uint8_t)(1u << g));
                    found = true;
                }
            }
            if (!found) {
                throw ParseError(0, "unknown sector field '" + s + "'");
            }
        }
        SectorLayout layout{widths, fields};
        SectorDistribution dist(layout, j.at("k").get<size_t>(), j.at("code_hash").get<std::string>());
        for (const auto &[key, value] : j.at("noise").items()) {
            dist.noise()[key] = value.get<double>();
        }
        size_t w = layout.total_width();
        for (const auto &[key, value] : j.at("table").items()) {
            dist[parse_sector_hex(key, w)] = value.get<double>();
        }
        return dist;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(0, std::string("malformed distribution JSON: ") + e.what());
    }
}

inline void write_dist_file(const std::string &path, const SectorDistribution &dist) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot open '" + path + "' for writing");
    }
    out << dist_to_json(dist).dump(2) << "\n";
}

inline SectorDistribution read_dist_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    return dist_from_json(j);
}

}  // namespace cssmap

#endif
