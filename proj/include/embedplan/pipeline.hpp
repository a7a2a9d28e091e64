#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "embedplan/corpus.hpp"
#include "embedplan/embed.hpp"
#include "embedplan/model.hpp"
#include "embedplan/protocols.hpp"
#include "embedplan/train.hpp"

namespace embedplan::pipeline {

struct ProtocolConfig {
    protocols::Protocol name = protocols::Protocol::Interpolation;
    double ratio = 0.8;
    std::string source, target;  // cross_domain; empty = every domain
    std::string held_out;        // loo; empty = every domain
};

struct EncoderConfig {
    std::string type = "builtin";  // builtin | table
    embed::BuiltinEncoderSpec builtin;
    std::filesystem::path table;  // type == table: an EMBT file
};

struct ExperimentConfig {
    std::vector<std::string> domains;
    std::filesystem::path data_dir;  // holds one directory per domain
    GenOptions gen;
    EncoderConfig encoder;
    model::ModelConfig model;
    train::TrainConfig train;
    std::vector<ProtocolConfig> protocols;
    std::vector<std::uint64_t> seeds{42, 123, 456};
    std::filesystem::path out_dir = "out";

    // Relative paths resolve against base_dir. Throws ConfigError.
    static ExperimentConfig from_json(const nlohmann::json& j, const std::filesystem::path& base_dir);
    static ExperimentConfig load(const std::filesystem::path& path);

    // Each stage's hash covers its own settings plus everything upstream.
    std::string gen_hash() const;
    std::string embed_hash() const;
    std::string train_hash(const ProtocolConfig& protocol, std::uint64_t seed) const;
};

// One trained model: a protocol scope (domain, source, held-out domain or "all") and a seed.
struct RunSpec {
    ProtocolConfig protocol;
    std::string scope;
    std::uint64_t seed = 0;
    std::filesystem::path dir;
};

std::vector<RunSpec> plan_runs(const ExperimentConfig& cfg);

struct Logger {
    std::ostream* out = nullptr;
    bool verbose = false;
    void info(const std::string& line) const;
    void debug(const std::string& line) const;
};

std::filesystem::path gen_dir(const ExperimentConfig& cfg);
std::filesystem::path embed_path(const ExperimentConfig& cfg);

void cmd_gen(const ExperimentConfig& cfg, const Logger& log);
void cmd_embed(const ExperimentConfig& cfg, const Logger& log);
void cmd_train(const ExperimentConfig& cfg, const Logger& log);
void cmd_eval(const ExperimentConfig& cfg, const Logger& log);
void cmd_matrix(const ExperimentConfig& cfg, const Logger& log);
void cmd_report(const ExperimentConfig& cfg, const Logger& log);

// Splits a run trains on and is evaluated against. Cross-domain runs yield one per target.
std::vector<protocols::SplitResult> make_splits(const Corpus& corpus, const RunSpec& run,
                                                const std::vector<std::string>& domains);

// One "domain problems states transitions" row per domain.
std::string format_counts(const Corpus& corpus);

// Value rounded to six significant digits, as written to every JSON/CSV artifact.
double round6(double x);

}  // namespace embedplan::pipeline
