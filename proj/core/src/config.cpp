#include "odsup/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "odsup/errors.hpp"

namespace odsup {

namespace {

struct Value {
    enum class Kind { String, Number, Boolean, Array };
    Kind kind = Kind::Number;
    std::string text;
    double number = 0.0;
    bool flag = false;
    std::vector<double> items;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
    throw ConfigError("config line " + std::to_string(line) + ": " + message);
}

double parse_number(std::string_view text, std::size_t line) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        fail(line, "cannot parse number '" + std::string(text) + "'");
    }
    return value;
}

Value parse_value(std::string_view text, std::size_t line) {
    text = trim(text);
    if (text.empty()) fail(line, "missing value");
    Value v;
    if (text.front() == '"') {
        if (text.size() < 2 || text.back() != '"') fail(line, "unterminated string");
        v.kind = Value::Kind::String;
        v.text = std::string(text.substr(1, text.size() - 2));
        return v;
    }
    if (text == "true" || text == "false") {
        v.kind = Value::Kind::Boolean;
        v.flag = (text == "true");
        return v;
    }
    if (text.front() == '[') {
        if (text.back() != ']') fail(line, "unterminated array");
        v.kind = Value::Kind::Array;
        std::string_view body = trim(text.substr(1, text.size() - 2));
        while (!body.empty()) {
            const std::size_t comma = body.find(',');
            const std::string_view item =
                trim(comma == std::string_view::npos ? body : body.substr(0, comma));
            if (item.empty()) fail(line, "empty array element");
            v.items.push_back(parse_number(item, line));
            if (comma == std::string_view::npos) break;
            body = trim(body.substr(comma + 1));
        }
        if (v.items.empty()) fail(line, "array must not be empty");
        return v;
    }
    v.kind = Value::Kind::Number;
    v.number = parse_number(text, line);
    return v;
}

// Strip a trailing comment that is not inside a quoted string.
std::string_view strip_comment(std::string_view s) {
    bool quoted = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '"') quoted = !quoted;
        if (s[i] == '#' && !quoted) return s.substr(0, i);
    }
    return s;
}

struct Block {
    std::size_t line = 0;
    std::map<std::string, Value> entries;
    std::map<std::string, std::size_t> lines;
    std::vector<std::string> order;
};

std::size_t as_count(const Value& v, const char* name, std::size_t line) {
    if (v.kind != Value::Kind::Number || v.number < 0 || v.number != std::floor(v.number)) {
        fail(line, std::string("'") + name + "' must be a nonnegative integer");
    }
    return static_cast<std::size_t>(v.number);
}

double as_number(const Value& v, const char* name, std::size_t line) {
    if (v.kind != Value::Kind::Number) fail(line, std::string("'") + name + "' must be a number");
    return v.number;
}

std::vector<double> as_list(const Value& v) {
    if (v.kind == Value::Kind::Array) return v.items;
    return {v.number};
}

}  // namespace

PowerConfig parse_power_config(std::istream& in) {
    Block top;
    std::vector<Block> cells;
    Block* current = &top;

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(strip_comment(raw));
        if (line.empty()) continue;
        if (line == "[[cell]]") {
            cells.push_back(Block{line_no, {}, {}});
            current = &cells.back();
            continue;
        }
        if (line.front() == '[') fail(line_no, "only [[cell]] sections are supported");
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) fail(line_no, "expected key = value");
        const std::string key{trim(line.substr(0, eq))};
        if (key.empty()) fail(line_no, "empty key");
        if (current->entries.count(key)) fail(line_no, "duplicate key '" + key + "'");
        current->entries.emplace(key, parse_value(line.substr(eq + 1), line_no));
        current->lines.emplace(key, line_no);
        current->order.push_back(key);
    }
    if (cells.empty()) throw ConfigError("config defines no [[cell]] blocks");

    PowerConfig config;
    std::size_t default_p = 5;
    std::size_t default_reps = 200;
    std::size_t default_B = 300;
    double default_alpha = 0.05;
    for (const std::string& key : top.order) {
        const Value& v = top.entries.at(key);
        const std::size_t at = top.lines.at(key);
        if (key == "seed") {
            config.seed = as_count(v, "seed", at);
        } else if (key == "kernel") {
            if (v.kind != Value::Kind::String) fail(at, "'kernel' must be a string");
            config.kernel = v.text;
        } else if (key == "p") {
            default_p = as_count(v, "p", at);
        } else if (key == "replications") {
            default_reps = as_count(v, "replications", at);
        } else if (key == "B") {
            default_B = as_count(v, "B", at);
        } else if (key == "alpha") {
            default_alpha = as_number(v, "alpha", at);
        } else {
            fail(at, "unknown top-level key '" + key + "'");
        }
    }
    if (config.kernel != "expneg" && config.kernel != "invquartic" && config.kernel != "const") {
        throw ConfigError("kernel must be expneg, invquartic or const");
    }

    for (const Block& block : cells) {
        auto find = [&](const char* key) -> const Value* {
            const auto it = block.entries.find(key);
            return it == block.entries.end() ? nullptr : &it->second;
        };
        for (const std::string& key : block.order) {
            static const char* known[] = {"model", "n",  "p", "replications", "B",   "alpha",
                                          "mu",    "sigma", "a", "b",         "m",   "tau",
                                          "delta"};
            bool ok = false;
            for (const char* k : known) ok = ok || key == k;
            if (!ok) fail(block.line, "unknown cell key '" + key + "'");
        }
        const Value* model_value = find("model");
        if (!model_value || model_value->kind != Value::Kind::String) {
            fail(block.line, "cell needs a string 'model'");
        }
        const auto model = dgp_model_from_string(model_value->text);
        if (!model) fail(block.line, "unknown model '" + model_value->text + "'");
        const Value* n_value = find("n");
        if (!n_value) fail(block.line, "cell needs 'n'");

        CellRequest base;
        base.spec.model = *model;
        base.spec.p = find("p") ? as_count(*find("p"), "p", block.line) : default_p;
        base.replications = find("replications")
                                ? as_count(*find("replications"), "replications", block.line)
                                : default_reps;
        base.replicates = find("B") ? as_count(*find("B"), "B", block.line) : default_B;
        base.alpha = find("alpha") ? as_number(*find("alpha"), "alpha", block.line) : default_alpha;

        // Cross product over n and every array-valued parameter, expanded in
        // fixed key order with the last key varying fastest.
        struct Axis {
            const char* key;
            std::vector<double> values;
        };
        std::vector<Axis> axes;
        axes.push_back({"n", as_list(*n_value)});
        for (const char* key : {"mu", "sigma", "a", "b", "m", "tau", "delta"}) {
            if (const Value* v = find(key)) axes.push_back({key, as_list(*v)});
        }

        std::vector<std::size_t> index(axes.size(), 0);
        while (true) {
            CellRequest request = base;
            for (std::size_t axis = 0; axis < axes.size(); ++axis) {
                const double value = axes[axis].values[index[axis]];
                const std::string_view key = axes[axis].key;
                if (key == "n") {
                    if (value < 3 || value != std::floor(value)) {
                        fail(block.line, "n must be an integer >= 3");
                    }
                    request.spec.n = static_cast<std::size_t>(value);
                } else if (key == "mu") {
                    request.spec.mu = value;
                } else if (key == "sigma") {
                    request.spec.sigma = value;
                } else if (key == "a") {
                    request.spec.ar = value;
                } else if (key == "b") {
                    request.spec.ma = value;
                } else if (key == "m") {
                    if (value < 1 || value != std::floor(value)) {
                        fail(block.line, "m must be an integer >= 1");
                    }
                    request.spec.cluster = static_cast<std::size_t>(value);
                } else if (key == "tau") {
                    request.spec.tau = value;
                } else if (key == "delta") {
                    request.spec.delta = value;
                }
            }
            validate_spec(request.spec);
            config.cells.push_back(request);

            // Advance the odometer; stop once every axis has rolled over.
            bool rolled_over = false;
            std::size_t axis = axes.size();
            while (true) {
                if (axis == 0) {
                    rolled_over = true;
                    break;
                }
                --axis;
                if (++index[axis] < axes[axis].values.size()) break;
                index[axis] = 0;
            }
            if (rolled_over) break;
        }
    }
    return config;
}

PowerConfig load_power_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    return parse_power_config(in);
}

}  // namespace odsup
