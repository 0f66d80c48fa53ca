// Copyright 2026 The ucoh Authors
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

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ucoh/error.hpp"
#include "ucoh/frames.hpp"

namespace ucoh {

namespace {

using nlohmann::json;

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

[[noreturn]] void schema(const std::string& what) { throw SchemaError("frame file: " + what); }

int read_positive_int(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) schema(std::string("missing key \"") + key + "\"");
    if (!it->is_number_integer()) schema(std::string("\"") + key + "\" must be an integer");
    const auto v = it->get<long long>();
    if (v < 1 || v > 1 << 20) schema(std::string("\"") + key + "\" out of range");
    return static_cast<int>(v);
}

}  // namespace

std::string frames_to_json(const MuetfEnsemble& e) {
    std::ostringstream os;
    os << "{\n  \"dim\": " << e.dim() << ",\n  \"count\": " << e.count() << ",\n  \"frames\": [\n";
    for (int mu = 0; mu < e.size(); ++mu) {
        os << "    [\n";
        const Frame& f = e.member(mu);
        for (int j = 0; j < f.count(); ++j) {
            os << "      [";
            for (int k = 0; k < f.dim(); ++k) {
                const Complex z = f.vector(j)(k);
                os << (k ? ", " : "") << "[" << fmt17(z.real()) << ", " << fmt17(z.imag()) << "]";
            }
            os << "]" << (j + 1 < f.count() ? "," : "") << "\n";
        }
        os << "    ]" << (mu + 1 < e.size() ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
    return os.str();
}

MuetfEnsemble frames_from_json(const std::string& text, std::string label) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& ex) {
        schema(std::string("invalid JSON: ") + ex.what());
    }
    if (!doc.is_object()) schema("top level must be an object");
    for (const auto& item : doc.items()) {
        const auto& k = item.key();
        if (k != "dim" && k != "count" && k != "frames") schema("unknown top-level key \"" + k + "\"");
    }
    const int d = read_positive_int(doc, "dim");
    const int n = read_positive_int(doc, "count");
    auto fit = doc.find("frames");
    if (fit == doc.end()) schema("missing key \"frames\"");
    if (!fit->is_array() || fit->empty()) schema("\"frames\" must be a nonempty array");

    std::vector<Frame> members;
    for (std::size_t mu = 0; mu < fit->size(); ++mu) {
        const json& fr = (*fit)[mu];
        if (!fr.is_array() || fr.size() != static_cast<std::size_t>(n)) {
            std::ostringstream os;
            os << "frame " << mu << " must hold " << n << " vectors";
            schema(os.str());
        }
        std::vector<CVector> vs;
        for (std::size_t j = 0; j < fr.size(); ++j) {
            const json& vec = fr[j];
            if (!vec.is_array() || vec.size() != static_cast<std::size_t>(d)) {
                std::ostringstream os;
                os << "frame " << mu << " vector " << j << " must have " << d << " entries, got "
                   << (vec.is_array() ? vec.size() : 0);
                schema(os.str());
            }
            CVector v(d);
            for (int k = 0; k < d; ++k) {
                const json& z = vec[static_cast<std::size_t>(k)];
                if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
                    std::ostringstream os;
                    os << "frame " << mu << " vector " << j << " entry " << k << " must be [re, im]";
                    schema(os.str());
                }
                v(k) = Complex(z[0].get<double>(), z[1].get<double>());
            }
            vs.push_back(std::move(v));
        }
        try {
            members.emplace_back(d, std::move(vs));
        } catch (const ValidationError& ex) {
            std::ostringstream os;
            os << "frame " << mu << ": " << ex.what();
            throw ValidationError(os.str());
        }
    }
    return MuetfEnsemble::certified(std::move(members), std::move(label));
}

void save_frames(const MuetfEnsemble& e, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << frames_to_json(e);
    if (!out) throw IoError("write to " + path + " failed");
}

MuetfEnsemble load_frames(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return frames_from_json(buf.str(), "file:" + path);
}

}  // namespace ucoh
