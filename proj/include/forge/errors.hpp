#pragma once

#include <stdexcept>
#include <string>

namespace forge {

// Base class for everything this library throws on domain-rule violations.
// Plumbing failures (I/O, sockets) use std::runtime_error directly.
class ForgeError : public std::runtime_error {
public:
    explicit ForgeError(const std::string& msg) : std::runtime_error(msg) {}
};

class NameError : public ForgeError {
public:
    explicit NameError(const std::string& msg) : ForgeError(msg) {}
};

class EncodingError : public ForgeError {
public:
    explicit EncodingError(const std::string& msg) : ForgeError(msg) {}
};

class ConfigError : public ForgeError {
public:
    explicit ConfigError(const std::string& msg) : ForgeError(msg) {}
};

// The five chain hashes were not pairwise usable; retry with a fresh salt.
class HashCollisionError : public ForgeError {
public:
    explicit HashCollisionError(const std::string& msg) : ForgeError(msg) {}
};

class ZoneScopeError : public ForgeError {
public:
    explicit ZoneScopeError(const std::string& msg) : ForgeError(msg) {}
};

class SignerError : public ForgeError {
public:
    explicit SignerError(const std::string& msg) : ForgeError(msg) {}
};

} // namespace forge
