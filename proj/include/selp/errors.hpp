#pragma once

#include <stdexcept>
#include <string>

namespace selp {

// Bad or malformed input data (files, seed specs, mismatched frames).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed text input, carries a line number in the message.
struct parse_error : input_error {
    explicit parse_error(const std::string& msg) : input_error(msg) {}
};

// Invalid parameter combination.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Dempster combination with total conflict (normalizer is zero).
struct conflict_error : std::runtime_error {
    explicit conflict_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Graph on which the automatic gamma cannot be computed.
struct degenerate_graph_error : std::runtime_error {
    explicit degenerate_graph_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace selp
