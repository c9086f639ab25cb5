#pragma once

#include <stdexcept>
#include <string>

namespace motionkey {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- trace ingestion ---
class IoError : public Error {
public:
    using Error::Error;
};
class MalformedRow : public Error {
public:
    using Error::Error;
};
class NonUniformSampling : public Error {
public:
    using Error::Error;
};
class EmptyFile : public Error {
public:
    using Error::Error;
};
class InvalidTrace : public Error {
public:
    using Error::Error;
};

// --- synthesis ---
class InvalidConfig : public Error {
public:
    using Error::Error;
};

// --- preprocessing ---
class NoBumpDetected : public Error {
public:
    using Error::Error;
};
class InsufficientSamples : public Error {
public:
    using Error::Error;
};
class InvalidKernelSize : public Error {
public:
    using Error::Error;
};
class InvalidSignal : public Error {
public:
    using Error::Error;
};

// --- features ---
class SignalTooShort : public Error {
public:
    using Error::Error;
};
class DegenerateSignal : public Error {
public:
    using Error::Error;
};
class InvalidBounds : public Error {
public:
    using Error::Error;
};
class InsufficientData : public Error {
public:
    using Error::Error;
};

// --- key generation / matching ---
class OutOfRange : public Error {
public:
    using Error::Error;
};
class InvalidBitCount : public Error {
public:
    using Error::Error;
};
class InvalidKey : public Error {
public:
    using Error::Error;
};
class LengthMismatch : public Error {
public:
    using Error::Error;
};
class InvalidFraction : public Error {
public:
    using Error::Error;
};

// --- evaluation ---
class InsufficientSubjects : public Error {
public:
    using Error::Error;
};
class EmptyMatrix : public Error {
public:
    using Error::Error;
};
class UndefinedF1 : public Error {
public:
    using Error::Error;
};
class InvalidGrid : public Error {
public:
    using Error::Error;
};

// --- entropy ---
class InvalidModel : public Error {
public:
    using Error::Error;
};

// --- pairing ---
class SessionNotFinished : public Error {
public:
    using Error::Error;
};

}  // namespace motionkey
