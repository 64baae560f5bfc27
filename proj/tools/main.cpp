#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "edgechroma/colormap.hpp"
#include "edgechroma/error.hpp"
#include "edgechroma/gradient.hpp"
#include "edgechroma/image_io.hpp"
#include "edgechroma/style.hpp"

namespace {

struct Options {
    std::string input;
    std::string output;
    std::string style;
    double threshold = 0.2;
    std::string map = "ember";
    std::string norm = "edge";
    int k = 5;
    std::uint64_t seed = 0;
    std::string start = "darkest";
};

edgechroma::ColorMap resolve_colormap(const std::string& value) {
    const auto names = edgechroma::builtin_colormap_names();
    for (const std::string& name : names) {
        if (value == name) {
            return edgechroma::builtin_colormap(value);
        }
    }
    if (std::filesystem::exists(value)) {
        return edgechroma::load_colormap(value);
    }
    std::string valid;
    for (const std::string& name : names) {
        if (!valid.empty()) {
            valid += ", ";
        }
        valid += name;
    }
    throw std::invalid_argument("--map: '" + value +
                                "' is neither a built-in color map (" + valid +
                                ") nor an existing file");
}

edgechroma::StartPolicy parse_start(const std::string& value) {
    return value == "random" ? edgechroma::StartPolicy::random
                             : edgechroma::StartPolicy::darkest;
}

int run_edges(const Options& opt) {
    const edgechroma::RgbImage image = edgechroma::load_image(opt.input);
    const edgechroma::EdgeDetection detection =
        edgechroma::detect_edges(image, opt.threshold);
    edgechroma::save_mask_png(detection.mask, opt.output);
    return 0;
}

int run_colorize(const Options& opt) {
    const edgechroma::RgbImage image = edgechroma::load_image(opt.input);
    const edgechroma::ColorMap map = resolve_colormap(opt.map);
    const edgechroma::EdgeDetection detection =
        edgechroma::detect_edges(image, opt.threshold);
    const auto domain = opt.norm == "all"
                            ? edgechroma::NormalizationDomain::all_pixels
                            : edgechroma::NormalizationDomain::edge_pixels;
    const edgechroma::RgbImage out = edgechroma::pseudo_color(
        detection.mask, detection.gradient.direction, map, domain);
    edgechroma::save_png(out, opt.output);
    return 0;
}

void warn_if_k_reduced(int requested, int actual) {
    if (actual != requested) {
        std::cerr << "edgechroma: note: style image has only " << actual
                  << " distinct colors; reduced -k from " << requested << "\n";
    }
}

int run_style_transfer(const Options& opt) {
    const edgechroma::RgbImage content = edgechroma::load_image(opt.input);
    const edgechroma::RgbImage style = edgechroma::load_image(opt.style);
    edgechroma::KMeansConfig cfg;
    cfg.k = opt.k;
    cfg.seed = opt.seed;
    edgechroma::KMeansTrace trace;
    const edgechroma::RgbImage out = edgechroma::style_transfer(
        content, style, opt.threshold, cfg, parse_start(opt.start), &trace);
    warn_if_k_reduced(cfg.k, trace.k);
    edgechroma::save_png(out, opt.output);
    return 0;
}

int run_learn_map(const Options& opt) {
    const edgechroma::RgbImage style = edgechroma::load_image(opt.style);
    edgechroma::KMeansConfig cfg;
    cfg.k = opt.k;
    cfg.seed = opt.seed;
    const edgechroma::Palette palette = edgechroma::kmeans_palette(style, cfg);
    warn_if_k_reduced(cfg.k, palette.k());
    const edgechroma::Palette ordered =
        edgechroma::order_palette(palette, parse_start(opt.start), opt.seed);
    edgechroma::save_colormap(edgechroma::palette_to_colormap(ordered),
                              opt.output);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sobel edge detection with directional pseudo-coloring and "
                 "palette-based style transfer"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* edges = app.add_subcommand(
        "edges", "Write the thresholded gradient magnitude as a black-and-white PNG");
    edges->add_option("-i,--input", opt.input, "Input image (PNG or JPEG)")
        ->required();
    edges->add_option("-o,--output", opt.output, "Output PNG path")->required();
    edges->add_option("-t,--threshold", opt.threshold,
                      "Edge threshold on normalized magnitude")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();

    CLI::App* colorize = app.add_subcommand(
        "colorize", "Color edges by gradient direction through a color map");
    colorize->add_option("-i,--input", opt.input, "Input image (PNG or JPEG)")
        ->required();
    colorize->add_option("-o,--output", opt.output, "Output PNG path")->required();
    colorize->add_option("-t,--threshold", opt.threshold,
                         "Edge threshold on normalized magnitude")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    colorize->add_option("--map", opt.map,
                         "Built-in color map name or .gcmap file path")
        ->capture_default_str();
    colorize->add_option("--norm", opt.norm,
                         "Direction normalization domain")
        ->check(CLI::IsMember({"edge", "all"}))
        ->capture_default_str();

    CLI::App* transfer = app.add_subcommand(
        "style-transfer", "Color content-image edges with a style image's palette");
    transfer->add_option("-i,--input", opt.input, "Content image (PNG or JPEG)")
        ->required();
    transfer->add_option("-s,--style", opt.style, "Style image (PNG or JPEG)")
        ->required();
    transfer->add_option("-o,--output", opt.output, "Output PNG path")->required();
    transfer->add_option("-t,--threshold", opt.threshold,
                         "Edge threshold on normalized magnitude")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    transfer->add_option("-k,--clusters", opt.k, "Number of dominant colors")
        ->check(CLI::Range(1, 1 << 20))
        ->capture_default_str();
    transfer->add_option("--seed", opt.seed, "Clustering seed")
        ->capture_default_str();
    transfer->add_option("--start", opt.start, "Color map start policy")
        ->check(CLI::IsMember({"darkest", "random"}))
        ->capture_default_str();

    CLI::App* learn = app.add_subcommand(
        "learn-map", "Learn a GCMAP color map from a style image");
    learn->add_option("-s,--style", opt.style, "Style image (PNG or JPEG)")
        ->required();
    learn->add_option("-o,--output", opt.output, "Output .gcmap path")->required();
    learn->add_option("-k,--clusters", opt.k, "Number of dominant colors")
        ->check(CLI::Range(1, 1 << 20))
        ->capture_default_str();
    learn->add_option("--seed", opt.seed, "Clustering seed")
        ->capture_default_str();
    learn->add_option("--start", opt.start, "Color map start policy")
        ->check(CLI::IsMember({"darkest", "random"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "edgechroma: " << e.what() << "\n";
        return 2;
    }

    try {
        if (edges->parsed()) {
            return run_edges(opt);
        }
        if (colorize->parsed()) {
            return run_colorize(opt);
        }
        if (transfer->parsed()) {
            return run_style_transfer(opt);
        }
        return run_learn_map(opt);
    } catch (const edgechroma::Error& e) {
        std::cerr << "edgechroma: error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "edgechroma: invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "edgechroma: error: " << e.what() << "\n";
        return 1;
    }
}
