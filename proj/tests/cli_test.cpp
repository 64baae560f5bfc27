#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "edgechroma/image_io.hpp"
#include "testutil.hpp"

using edgechroma::RgbImage;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;

    TempDir()
        : path(fs::temp_directory_path() /
               ("edgechroma_cli_" + std::to_string(::getpid()))) {
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }

    std::string file(const std::string& name) const { return (path / name).string(); }
};

int run_cli(const std::string& args, const std::string& stderr_file = "/dev/null") {
    const std::string command = std::string(EDGECHROMA_CLI_PATH) + " " + args +
                                " 2>" + stderr_file;
    const int status = std::system(command.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<char> slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return std::vector<char>((std::istreambuf_iterator<char>(in)), {});
}

std::string slurp_text(const std::string& path) {
    std::ifstream in(path);
    return std::string((std::istreambuf_iterator<char>(in)), {});
}

RgbImage checkerboard(int w, int h, int cell) {
    RgbImage img(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const bool on = ((x / cell) + (y / cell)) % 2 == 0;
            img.set_pixel(x, y, on ? edgechroma::Rgb8{235, 235, 235}
                                   : edgechroma::Rgb8{25, 25, 25});
        }
    }
    return img;
}

}  // namespace

TEST_CASE("colorize of a uniform image writes an all-black PNG") {
    TempDir dir;
    RgbImage uniform(12, 9);
    for (int y = 0; y < 9; ++y) {
        for (int x = 0; x < 12; ++x) {
            uniform.set_pixel(x, y, {77, 140, 22});
        }
    }
    edgechroma::save_png(uniform, dir.file("in.png"));
    CHECK(run_cli("colorize -i " + dir.file("in.png") + " -o " +
                  dir.file("out.png")) == 0);
    const RgbImage out = edgechroma::load_image(dir.file("out.png"));
    REQUIRE(out.width() == 12);
    REQUIRE(out.height() == 9);
    for (int y = 0; y < 9; ++y) {
        for (int x = 0; x < 12; ++x) {
            CHECK(out.pixel(x, y) == edgechroma::Rgb8{0, 0, 0});
        }
    }
}

TEST_CASE("edges with t = 0 marks every pixel of a non-uniform image") {
    TempDir dir;
    edgechroma::save_png(checkerboard(16, 10, 4), dir.file("in.png"));
    CHECK(run_cli("edges -i " + dir.file("in.png") + " -o " + dir.file("out.png") +
                  " -t 0") == 0);
    const RgbImage out = edgechroma::load_image(dir.file("out.png"));
    REQUIRE(out.width() == 16);
    REQUIRE(out.height() == 10);
    for (int y = 0; y < 10; ++y) {
        for (int x = 0; x < 16; ++x) {
            CHECK(out.pixel(x, y) == edgechroma::Rgb8{255, 255, 255});
        }
    }
}

TEST_CASE("identical invocations write bit-identical files") {
    TempDir dir;
    std::mt19937_64 rng(113);
    edgechroma::save_png(testutil::random_image(rng, 40, 30), dir.file("c.png"));
    edgechroma::save_png(testutil::random_image(rng, 16, 16), dir.file("s.png"));

    const std::string args = "style-transfer -i " + dir.file("c.png") + " -s " +
                             dir.file("s.png") + " -k 4 --seed 9 -o ";
    CHECK(run_cli(args + dir.file("a.png")) == 0);
    CHECK(run_cli(args + dir.file("b.png")) == 0);
    CHECK(slurp(dir.file("a.png")) == slurp(dir.file("b.png")));
}

TEST_CASE("learn-map plus colorize --map equals style-transfer") {
    TempDir dir;
    std::mt19937_64 rng(127);
    edgechroma::save_png(testutil::random_image(rng, 32, 24), dir.file("c.png"));
    edgechroma::save_png(testutil::random_image(rng, 12, 12), dir.file("s.png"));

    CHECK(run_cli("style-transfer -i " + dir.file("c.png") + " -s " +
                  dir.file("s.png") + " -k 3 --seed 5 -t 0.25 -o " +
                  dir.file("direct.png")) == 0);
    CHECK(run_cli("learn-map -s " + dir.file("s.png") + " -k 3 --seed 5 -o " +
                  dir.file("style.gcmap")) == 0);
    CHECK(run_cli("colorize -i " + dir.file("c.png") + " -t 0.25 --map " +
                  dir.file("style.gcmap") + " -o " + dir.file("composed.png")) == 0);
    CHECK(slurp(dir.file("direct.png")) == slurp(dir.file("composed.png")));
}

TEST_CASE("colorize accepts built-in map names and the --norm flag") {
    TempDir dir;
    edgechroma::save_png(checkerboard(20, 20, 5), dir.file("in.png"));
    for (const char* map : {"ember", "ocean", "polar", "wheel", "contrast"}) {
        CHECK(run_cli("colorize -i " + dir.file("in.png") + " -o " +
                      dir.file("out.png") + " --map " + map) == 0);
    }
    CHECK(run_cli("colorize -i " + dir.file("in.png") + " -o " +
                  dir.file("out.png") + " --norm all") == 0);
}

TEST_CASE("missing input exits 1 and names the path") {
    TempDir dir;
    const std::string log = dir.file("stderr.txt");
    CHECK(run_cli("edges -i " + dir.file("absent.png") + " -o " +
                      dir.file("out.png"),
                  log) == 1);
    CHECK(slurp_text(log).find("absent.png") != std::string::npos);

    // Corrupt input also exits 1.
    {
        std::ofstream out(dir.file("bad.png"), std::ios::binary);
        const unsigned char sig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
        out.write(reinterpret_cast<const char*>(sig), 8);
        out << "junk";
    }
    CHECK(run_cli("colorize -i " + dir.file("bad.png") + " -o " +
                      dir.file("out.png"),
                  log) == 1);
    CHECK(slurp_text(log).find("bad.png") != std::string::npos);
}

TEST_CASE("invalid arguments exit 2 and name the flag") {
    TempDir dir;
    edgechroma::save_png(checkerboard(8, 8, 2), dir.file("in.png"));
    const std::string log = dir.file("stderr.txt");

    CHECK(run_cli("edges -i " + dir.file("in.png") + " -o " + dir.file("o.png") +
                      " -t 1.5",
                  log) == 2);
    CHECK(slurp_text(log).find("threshold") != std::string::npos);

    CHECK(run_cli("style-transfer -i " + dir.file("in.png") + " -s " +
                      dir.file("in.png") + " -o " + dir.file("o.png") + " -k 0",
                  log) == 2);
    CHECK(run_cli("colorize -i " + dir.file("in.png") + " -o " + dir.file("o.png") +
                      " --norm sideways",
                  log) == 2);
    CHECK(run_cli("colorize -i " + dir.file("in.png") + " -o " + dir.file("o.png") +
                      " --map no-such-map",
                  log) == 2);
    CHECK(slurp_text(log).find("--map") != std::string::npos);

    CHECK(run_cli("edges -o " + dir.file("o.png"), log) == 2);  // missing -i
    CHECK(run_cli("frobnicate", log) == 2);                     // unknown command
    CHECK(run_cli("", log) == 2);                               // no subcommand
}

TEST_CASE("a style with too few distinct colors is reported") {
    TempDir dir;
    RgbImage flat(6, 6);
    for (int y = 0; y < 6; ++y) {
        for (int x = 0; x < 6; ++x) {
            flat.set_pixel(x, y, {9, 9, 9});
        }
    }
    edgechroma::save_png(flat, dir.file("style.png"));
    edgechroma::save_png(checkerboard(12, 12, 3), dir.file("content.png"));
    const std::string log = dir.file("stderr.txt");
    CHECK(run_cli("style-transfer -i " + dir.file("content.png") + " -s " +
                      dir.file("style.png") + " -k 4 -o " + dir.file("o.png"),
                  log) == 0);
    CHECK(slurp_text(log).find("distinct") != std::string::npos);

    CHECK(run_cli("learn-map -s " + dir.file("style.png") + " -k 4 -o " +
                      dir.file("o.gcmap"),
                  log) == 0);
    CHECK(slurp_text(log).find("distinct") != std::string::npos);
}

TEST_CASE("--help exits 0") {
    CHECK(run_cli("--help") == 0);
    CHECK(run_cli("colorize --help") == 0);
}
