#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "edgechroma/colormap.hpp"
#include "edgechroma/error.hpp"

namespace edgechroma {
namespace {

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream stream(line);
    std::string token;
    while (stream >> token) {
        tokens.push_back(token);
    }
    return tokens;
}

double parse_double(const std::string& token, const std::string& path, int line) {
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(path + ":" + std::to_string(line) +
                             ": expected a number, got '" + token + "'",
                         line);
    }
    return value;
}

int parse_channel(const std::string& token, const std::string& path, int line) {
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 0 ||
        value > 255) {
        throw ParseError(path + ":" + std::to_string(line) +
                             ": expected a channel value 0-255, got '" + token +
                             "'",
                         line);
    }
    return value;
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

ColorMap load_colormap(const std::string& path) {
    std::ifstream file(path);
    if (!file) {
        throw Error("cannot open color map file '" + path + "'");
    }

    bool have_header = false;
    bool have_mode = false;
    InterpMode mode = InterpMode::linear;
    std::vector<ColorStop> stops;

    std::string line;
    int line_number = 0;
    while (std::getline(file, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        const std::vector<std::string> tokens = split_tokens(line);
        if (tokens.empty() || tokens[0][0] == '#') {
            continue;
        }
        if (!have_header) {
            if (tokens.size() != 2 || tokens[0] != "GCMAP" || tokens[1] != "1") {
                throw ParseError(path + ":" + std::to_string(line_number) +
                                     ": expected header 'GCMAP 1'",
                                 line_number);
            }
            have_header = true;
            continue;
        }
        if (!have_mode) {
            if (tokens.size() != 2 || tokens[0] != "mode" ||
                (tokens[1] != "linear" && tokens[1] != "segment")) {
                throw ParseError(path + ":" + std::to_string(line_number) +
                                     ": expected 'mode linear' or 'mode segment'",
                                 line_number);
            }
            mode = tokens[1] == "linear" ? InterpMode::linear : InterpMode::segment;
            have_mode = true;
            continue;
        }
        if (tokens[0] != "stop") {
            throw ParseError(path + ":" + std::to_string(line_number) +
                                 ": expected a 'stop' line, got '" + tokens[0] + "'",
                             line_number);
        }
        const std::size_t expected = mode == InterpMode::segment ? 6 : 5;
        if (tokens.size() != expected) {
            throw ParseError(
                path + ":" + std::to_string(line_number) + ": stop needs " +
                    (mode == InterpMode::segment
                         ? "'stop <position> <R> <G> <B> <width>'"
                         : "'stop <position> <R> <G> <B>'"),
                line_number);
        }
        ColorStop stop;
        stop.position = parse_double(tokens[1], path, line_number);
        stop.color.r = static_cast<std::uint8_t>(parse_channel(tokens[2], path, line_number));
        stop.color.g = static_cast<std::uint8_t>(parse_channel(tokens[3], path, line_number));
        stop.color.b = static_cast<std::uint8_t>(parse_channel(tokens[4], path, line_number));
        if (mode == InterpMode::segment) {
            stop.width = parse_double(tokens[5], path, line_number);
        }
        stops.push_back(stop);
    }

    if (!have_header) {
        throw ParseError(path + ": missing 'GCMAP 1' header", line_number);
    }
    if (!have_mode) {
        throw ParseError(path + ": missing 'mode' line", line_number);
    }
    try {
        return ColorMap(std::move(stops), mode);
    } catch (const std::invalid_argument& e) {
        throw Error("invalid color map in '" + path + "': " + e.what());
    }
}

void save_colormap(const ColorMap& map, const std::string& path) {
    std::ofstream file(path, std::ios::trunc);
    if (!file) {
        throw Error("cannot write color map file '" + path + "'");
    }
    file << "GCMAP 1\n";
    file << "mode " << (map.mode() == InterpMode::linear ? "linear" : "segment")
         << "\n";
    for (const ColorStop& s : map.stops()) {
        file << "stop " << format_number(s.position) << ' ' << int(s.color.r)
             << ' ' << int(s.color.g) << ' ' << int(s.color.b);
        if (map.mode() == InterpMode::segment) {
            file << ' ' << format_number(s.width);
        }
        file << '\n';
    }
    if (!file.flush()) {
        throw Error("failed writing color map file '" + path + "'");
    }
}

}  // namespace edgechroma
