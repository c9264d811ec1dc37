#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vcs/image_io.hpp"
#include "vcs/mevcs.hpp"
#include "vcs/verifier.hpp"

namespace {

using namespace vcs;

std::string members_text(const std::vector<int>& members)
{
    std::string out = "{";
    for (size_t i = 0; i < members.size(); ++i) {
        if (i != 0)
            out += ",";
        out += std::to_string(members[i]);
    }
    return out + "}";
}

// One key=value per line; '#' starts a comment, blank lines are skipped.
std::map<std::string, std::string> read_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open " + path + " for reading");
    std::map<std::string, std::string> config;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        const size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos)
            continue;
        const size_t end = line.find_last_not_of(" \t\r");
        line = line.substr(begin, end - begin + 1);
        const size_t eq = line.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ParseError(path + ":" + std::to_string(number) + ": expected key=value");
        const std::string key = line.substr(0, eq);
        if (config.count(key))
            throw ParseError(path + ":" + std::to_string(number) + ": duplicate key '" + key
                             + "'");
        config[key] = line.substr(eq + 1);
    }
    return config;
}

int parse_int(const std::string& text, const std::string& what)
{
    try {
        size_t used = 0;
        const int value = std::stoi(text, &used);
        if (used != text.size())
            throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw ParseError(what + " must be an integer, got '" + text + "'");
    }
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what)
{
    std::vector<int> values;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        values.push_back(parse_int(item, what));
    if (values.empty())
        throw ParseError(what + " must list at least one integer");
    return values;
}

class Config {
public:
    explicit Config(const std::string& path) : path_(path), values_(read_config(path)) {}

    bool has(const std::string& key) const { return values_.count(key) != 0; }

    std::string get(const std::string& key)
    {
        const auto it = values_.find(key);
        if (it == values_.end())
            throw ParameterError(path_ + ": missing required key '" + key + "'");
        used_.insert(it->first);
        return it->second;
    }

    std::string get(const std::string& key, const std::string& fallback)
    {
        if (!has(key))
            return fallback;
        return get(key);
    }

    int get_int(const std::string& key) { return parse_int(get(key), key); }

    int get_int(const std::string& key, int fallback)
    {
        return has(key) ? get_int(key) : fallback;
    }

    std::vector<int> get_list(const std::string& key) { return parse_int_list(get(key), key); }

    void reject_unknown() const
    {
        for (const auto& [key, value] : values_)
            if (!used_.count(key))
                throw ParameterError(path_ + ": unknown key '" + key + "'");
    }

private:
    std::string path_;
    std::map<std::string, std::string> values_;
    std::set<std::string> used_;
};

BasisMatrixSet select_base(Config& config, int k, int n)
{
    if (config.has("basis")) {
        BasisMatrixSet base = load_basis_file(config.get("basis"));
        if (base.k != k || base.n != n)
            throw ParameterError("basis file is for (" + std::to_string(base.k) + ","
                                 + std::to_string(base.n) + "), scheme wants ("
                                 + std::to_string(k) + "," + std::to_string(n) + ")");
        return base;
    }
    if (k == n)
        return naor_shamir_kk(k);
    if (k == 2)
        return two_of_p(n);
    throw ParameterError("no built-in (" + std::to_string(k) + "," + std::to_string(n)
                         + ") basis; pass basis=<file>");
}

Palette select_palette(Config& config, int colors)
{
    if (config.has("palette"))
        return read_palette_file(config.get("palette"), colors);
    return default_palette(colors);
}

std::vector<int> cover_levels(Config& config, int n, int fallback)
{
    std::vector<int> levels = config.has("covers")
                                  ? config.get_list("covers")
                                  : std::vector<int>(static_cast<size_t>(n), fallback);
    if (static_cast<int>(levels.size()) == 1 && n > 1)
        levels.assign(static_cast<size_t>(n), levels.front());
    if (static_cast<int>(levels.size()) != n)
        throw ParameterError("covers must list one level count per share");
    return levels;
}

SchemeBundle scheme_from_config(Config& config)
{
    const SchemeMode mode = mode_from_name(config.get("mode"));
    const int k = config.get_int("k");
    const int n = config.get_int("n");
    const std::string id = config.get("id", "");
    SchemeBundle scheme;
    switch (mode) {
    case SchemeMode::binary_evcs:
        scheme = make_binary_evcs(select_base(config, k, n), id);
        break;
    case SchemeMode::gray_evcs: {
        const int g = config.get_int("g");
        const std::vector<int> covers = cover_levels(config, n, g);
        scheme = make_gray_evcs(select_base(config, k, n), g, covers, id);
        break;
    }
    case SchemeMode::color_evcs: {
        const int colors = config.get_int("colors", 3);
        scheme = make_color_evcs(select_base(config, k, n), colors,
                                 select_palette(config, colors), id);
        break;
    }
    case SchemeMode::gray_mevcs: {
        const size_t sets = enumerate_qualified(k, n).size();
        std::vector<int> levels = config.has("levels") ? config.get_list("levels")
                                                       : std::vector<int>{2};
        if (levels.size() == 1)
            levels.assign(sets, levels.front());
        scheme = build_mevcs(k, n, levels, cover_levels(config, n, 2), id);
        break;
    }
    case SchemeMode::color_mevcs: {
        const int colors = config.get_int("colors", 3);
        const Palette palette = select_palette(config, colors);
        if (config.get("reference", "") == "1")
            scheme = reference_color_mevcs_23(palette, id);
        else
            scheme = build_color_mevcs(k, n, colors, palette, id);
        break;
    }
    }
    config.reject_unknown();
    return scheme;
}

void print_summary(const SchemeBundle& scheme, std::ostream& out)
{
    out << "scheme=" << scheme.id << '\n';
    out << "mode=" << mode_name(scheme.mode) << '\n';
    out << "k=" << scheme.k << " n=" << scheme.n << '\n';
    out << "m0=" << scheme.m0() << '\n';
    out << "m_E=" << scheme.m_e() << '\n';
    for (size_t i = 0; i < scheme.secrets.size(); ++i) {
        out << "alpha_E";
        if (scheme.is_mevcs())
            out << '[' << members_text(scheme.secrets[i].members) << ']';
        out << '=' << ratio_text(scheme.alpha(i)) << '\n';
    }
}

int run_build(const std::string& config_path, const std::string& out_path)
{
    Config config(config_path);
    const SchemeBundle scheme = scheme_from_config(config);
    write_scheme_file(scheme, out_path);
    print_summary(scheme, std::cout);
    std::cout << "wrote " << out_path << '\n';
    return 0;
}

int run_info(const std::string& scheme_path)
{
    const SchemeBundle scheme = read_scheme_file(scheme_path);
    print_summary(scheme, std::cout);
    const TileShape tile = plan_tile(scheme.m_e());
    std::cout << "tile=" << tile.h << 'x' << tile.w << " pad=" << tile.pad << '\n';
    for (size_t i = 0; i < scheme.secrets.size(); ++i) {
        const SecretSlot& slot = scheme.secrets[i];
        std::cout << "secret " << i + 1 << ": members="
                  << (slot.members.empty() ? std::string("any-") + std::to_string(scheme.k)
                                           : members_text(slot.members))
                  << " symbols=" << slot.symbol_count
                  << (slot.chromatic ? " chromatic" : " gray") << " width=" << slot.width
                  << " gap=" << slot.gap << " d=" << slot.d << '\n';
    }
    for (const PaletteEntry& entry : scheme.palette.entries)
        std::cout << "color " << entry.id << ": " << entry.r << ' ' << entry.g << ' '
                  << entry.b << '\n';
    return 0;
}

int run_encode(const std::string& scheme_path, const std::vector<std::string>& secret_paths,
               const std::vector<std::string>& cover_paths, std::uint64_t seed,
               const std::string& out_dir)
{
    const SchemeBundle scheme = read_scheme_file(scheme_path);
    if (secret_paths.size() != scheme.secrets.size())
        throw ParameterError("scheme wants " + std::to_string(scheme.secrets.size())
                             + " secret image(s), got " + std::to_string(secret_paths.size()));
    if (static_cast<int>(cover_paths.size()) != scheme.n)
        throw ParameterError("scheme wants " + std::to_string(scheme.n) + " cover images, got "
                             + std::to_string(cover_paths.size()));

    std::vector<IndexedImage> secrets;
    for (size_t i = 0; i < secret_paths.size(); ++i) {
        const RawImage raw = read_raw_file(secret_paths[i]);
        const SecretSlot& slot = scheme.secrets[i];
        secrets.push_back(slot.chromatic ? index_color(raw, scheme.palette)
                                         : index_gray(raw, slot.symbol_count));
    }
    std::vector<IndexedImage> covers;
    for (size_t j = 0; j < cover_paths.size(); ++j) {
        const RawImage raw = read_raw_file(cover_paths[j]);
        covers.push_back(scheme.color_covers()
                             ? index_color(raw, scheme.palette)
                             : index_gray(raw, scheme.extension.level(static_cast<int>(j))));
    }

    const std::vector<ShareImage> shares = encode(scheme, secrets, covers, seed);
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
        throw IoError("cannot create directory " + out_dir + ": " + ec.message());
    const std::string extension = scheme.palette.size() > 0 ? ".ppm" : ".pgm";
    std::cout << "tile=" << shares.front().tile.h << 'x' << shares.front().tile.w << '\n';
    for (const ShareImage& share : shares) {
        const std::string path = (std::filesystem::path(out_dir)
                                  / ("share-" + std::to_string(share.share_index) + extension))
                                     .string();
        write_share_file(path, share, scheme.palette);
        std::cout << "share=" << path << '\n';
    }
    return 0;
}

int run_stack(const std::vector<std::string>& inputs, const std::string& out_path)
{
    std::vector<RawImage> images;
    for (const std::string& path : inputs)
        images.push_back(read_raw_file(path));
    write_raw_file(out_path, stack_raw(images));
    std::cout << "wrote " << out_path << '\n';
    return 0;
}

int run_verify(const std::string& scheme_path, bool with_oracle, int max_m, long long cover_cap,
               int samples, bool no_sampling, std::uint64_t sample_seed,
               const std::string& report_path)
{
    const SchemeBundle scheme = read_scheme_file(scheme_path);
    AuditOptions options;
    options.security.cover_cap = cover_cap;
    options.security.sample_count = samples;
    options.security.allow_sampling = !no_sampling;
    options.security.sample_seed = sample_seed;
    options.with_oracle = with_oracle;
    options.oracle.max_m = max_m;
    options.oracle.covers = options.security;
    const AuditReport report = audit(scheme, options);
    std::cout << report.text();
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out)
            throw IoError("cannot open " + report_path + " for writing");
        out << report.text();
    }
    return report.pass() ? 0 : 2;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"threshold visual cryptography with meaningful shares"};
    app.require_subcommand(1);

    std::string config_path, scheme_path, out_path, report_path;
    std::vector<std::string> secret_paths, cover_paths, stack_inputs;
    std::uint64_t seed = 0, sample_seed = 1;
    bool with_oracle = false, no_sampling = false;
    int max_m = 10, samples = 256;
    long long cover_cap = 4096;

    CLI::App* build = app.add_subcommand("build", "build a scheme from a key=value config");
    build->add_option("config", config_path, "config file")->required();
    build->add_option("-o,--out", out_path, "scheme file to write")->required();

    CLI::App* info = app.add_subcommand("info", "describe a scheme file");
    info->add_option("scheme", scheme_path, "scheme file")->required();

    CLI::App* enc = app.add_subcommand("encode", "split secrets into share images");
    enc->add_option("-s,--scheme", scheme_path, "scheme file")->required();
    enc->add_option("--secret", secret_paths, "secret image, one per slot")->required();
    enc->add_option("--cover", cover_paths, "cover image, one per share")->required();
    enc->add_option("--seed", seed, "permutation seed")->required();
    enc->add_option("-o,--out", out_path, "output directory")->required();

    CLI::App* stk = app.add_subcommand("stack", "stack share images");
    stk->add_option("shares", stack_inputs, "share images")->required();
    stk->add_option("-o,--out", out_path, "stacked image to write")->required();

    CLI::App* ver = app.add_subcommand("verify", "audit a scheme's contrast and security");
    ver->add_option("scheme", scheme_path, "scheme file")->required();
    ver->add_flag("--oracle", with_oracle, "also run the arrangement enumeration");
    ver->add_option("--max-m", max_m, "widest matrix the enumeration accepts");
    ver->add_option("--cover-cap", cover_cap, "exhaustive cover assignment cap");
    ver->add_option("--samples", samples, "sampled assignments above the cap");
    ver->add_flag("--no-sampling", no_sampling, "fail instead of sampling above the cap");
    ver->add_option("--sample-seed", sample_seed, "seed for sampled assignments");
    ver->add_option("--report", report_path, "also write the report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (build->parsed())
            return run_build(config_path, out_path);
        if (info->parsed())
            return run_info(scheme_path);
        if (enc->parsed())
            return run_encode(scheme_path, secret_paths, cover_paths, seed, out_path);
        if (stk->parsed())
            return run_stack(stack_inputs, out_path);
        if (ver->parsed())
            return run_verify(scheme_path, with_oracle, max_m, cover_cap, samples, no_sampling,
                              sample_seed, report_path);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
