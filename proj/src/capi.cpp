#include "colhur/colhur.h"

#include <memory>
#include <optional>
#include <string>

#include "colhur/algebra.hpp"
#include "colhur/classes.hpp"
#include "colhur/errors.hpp"
#include "colhur/serialize.hpp"
#include "colhur/verify.hpp"

struct colhur_context {
  colhur::Coloring coloring;
  colhur::Limits limits;
  std::optional<std::vector<colhur::NeckMess>> classes;

  const std::vector<colhur::NeckMess>& classList() {
    if (!classes) classes = colhur::enumerateNeckMesses(coloring.multiplicities(), limits);
    return *classes;
  }
};

struct colhur_buffer {
  std::string data;
};

namespace {

thread_local std::string lastError;

colhur_status record(colhur_status status, std::string message) {
  lastError = std::move(message);
  return status;
}

// Maps library exceptions onto status codes.
template <class Body>
colhur_status guarded(Body&& body) {
  try {
    lastError.clear();
    return body();
  } catch (const colhur::ValidationError& e) {
    return record(COLHUR_ERR_VALIDATION, e.what());
  } catch (const colhur::CapExceeded& e) {
    return record(COLHUR_ERR_CAP, e.what());
  } catch (const colhur::VerificationFailure& e) {
    return record(COLHUR_ERR_VERIFY, e.what());
  } catch (const nlohmann::json::exception& e) {
    return record(COLHUR_ERR_VALIDATION, e.what());
  } catch (const std::exception& e) {
    return record(COLHUR_ERR_INTERNAL, e.what());
  } catch (...) {
    return record(COLHUR_ERR_INTERNAL, "unknown error");
  }
}

colhur::Limits toLimits(const colhur_limits* limits) {
  colhur::Limits out;
  if (!limits) return out;
  out.maxDegree = limits->max_degree;
  out.maxYoung = limits->max_young;
  out.maxNecklaceDegree = limits->max_necklace_degree;
  out.maxScanDegree = limits->max_scan_degree;
  out.maxVerifyDegree = limits->max_verify_degree;
  if (!out.maxDegree || !out.maxYoung || !out.maxNecklaceDegree || !out.maxScanDegree || !out.maxVerifyDegree) {
    throw colhur::ValidationError("limits must be positive");
  }
  return out;
}

void fromLimits(const colhur::Limits& in, colhur_limits* out) {
  out->max_degree = static_cast<uint32_t>(in.maxDegree);
  out->max_young = in.maxYoung;
  out->max_necklace_degree = static_cast<uint32_t>(in.maxNecklaceDegree);
  out->max_scan_degree = static_cast<uint32_t>(in.maxScanDegree);
  out->max_verify_degree = static_cast<uint32_t>(in.maxVerifyDegree);
}

colhur_status makeContext(colhur::Coloring coloring, const colhur_limits* limits, colhur_context** out) {
  colhur::Limits resolved = toLimits(limits);
  if (coloring.degree() > resolved.maxDegree) {
    throw colhur::CapExceeded("N = " + std::to_string(coloring.degree()) + " exceeds the cap " +
                              std::to_string(resolved.maxDegree));
  }
  *out = new colhur_context{std::move(coloring), resolved, std::nullopt};
  return COLHUR_OK;
}

void requireArgs(bool ok) {
  if (!ok) throw colhur::ValidationError("null argument");
}

colhur_buffer* makeBuffer(std::string data) { return new colhur_buffer{std::move(data)}; }

colhur::NeckMess parseFor(const colhur_context* ctx, const char* text, const char* role) {
  requireArgs(text != nullptr);
  colhur::NeckMess mess = colhur::parseNeckMess(text);
  colhur::requireMatchesColoring(mess, ctx->coloring, role);
  return mess;
}

std::int64_t toInt64(const boost::multiprecision::cpp_int& value) {
  if (value > std::numeric_limits<std::int64_t>::max() || value < std::numeric_limits<std::int64_t>::min()) {
    throw colhur::CapExceeded("value does not fit in 64 bits");
  }
  return value.convert_to<std::int64_t>();
}

struct ConstantValues {
  std::optional<std::uint64_t> oracle;
  std::optional<colhur::Rational> hurwitz;
};

ConstantValues computeConstant(colhur_context* ctx, const char* lambda, const char* mu, const char* nu,
                               colhur_method method) {
  if (method != COLHUR_METHOD_BOTH && method != COLHUR_METHOD_ORACLE && method != COLHUR_METHOD_HURWITZ) {
    throw colhur::ValidationError("unknown method");
  }
  const colhur::NeckMess l = parseFor(ctx, lambda, "lambda");
  const colhur::NeckMess m = parseFor(ctx, mu, "mu");
  const colhur::NeckMess n = parseFor(ctx, nu, "nu");
  ConstantValues values;
  if (method != COLHUR_METHOD_HURWITZ) values.oracle = colhur::structureConstantOracle(l, m, n, ctx->coloring, ctx->limits);
  if (method != COLHUR_METHOD_ORACLE) values.hurwitz = colhur::hurwitzStructureConstant(l, m, n, ctx->coloring, ctx->limits);
  return values;
}

}  // namespace

extern "C" {

const char* colhur_version(void) { return "0.1.0"; }

const char* colhur_last_error(void) { return lastError.c_str(); }

void colhur_limits_default(colhur_limits* limits) {
  if (limits) fromLimits(colhur::Limits{}, limits);
}

void colhur_limits_from_env(colhur_limits* limits) {
  if (limits) fromLimits(colhur::Limits::fromEnvironment(), limits);
}

colhur_status colhur_context_create_blocks(const uint32_t* multiplicities, size_t count, const colhur_limits* limits,
                                           colhur_context** out) {
  return guarded([&] {
    requireArgs(out != nullptr && (multiplicities != nullptr || count == 0));
    std::vector<std::size_t> m(multiplicities, multiplicities + count);
    return makeContext(colhur::Coloring::fromMultiplicities(m), limits, out);
  });
}

colhur_status colhur_context_create_letters(const char* letters, const colhur_limits* limits, colhur_context** out) {
  return guarded([&] {
    requireArgs(out != nullptr && letters != nullptr);
    return makeContext(colhur::Coloring::fromLetters(letters), limits, out);
  });
}

void colhur_context_destroy(colhur_context* ctx) { delete ctx; }

size_t colhur_degree(const colhur_context* ctx) { return ctx ? ctx->coloring.degree() : 0; }

uint64_t colhur_young_order(const colhur_context* ctx) { return ctx ? colhur::youngOrder(ctx->coloring) : 0; }

colhur_status colhur_class_count(colhur_context* ctx, size_t* out) {
  return guarded([&] {
    requireArgs(ctx && out);
    *out = ctx->classList().size();
    return COLHUR_OK;
  });
}

colhur_status colhur_class_label(colhur_context* ctx, size_t index, colhur_buffer** out) {
  return guarded([&] {
    requireArgs(ctx && out);
    const auto& classes = ctx->classList();
    if (index >= classes.size()) throw colhur::ValidationError("class index out of range");
    *out = makeBuffer(colhur::formatNeckMess(classes[index]));
    return COLHUR_OK;
  });
}

colhur_status colhur_classes_json(colhur_context* ctx, colhur_buffer** out) {
  return guarded([&] {
    requireArgs(ctx && out);
    *out = makeBuffer(colhur::classesJson(ctx->coloring, ctx->limits).dump(2) + "\n");
    return COLHUR_OK;
  });
}

colhur_status colhur_constant(colhur_context* ctx, const char* lambda, const char* mu, const char* nu,
                              colhur_method method, colhur_constant_result* out) {
  return guarded([&] {
    requireArgs(ctx && out);
    const ConstantValues values = computeConstant(ctx, lambda, mu, nu, method);
    colhur_constant_result result{};
    if (values.oracle) {
      result.has_oracle = 1;
      result.oracle = *values.oracle;
    }
    if (values.hurwitz) {
      result.has_hurwitz = 1;
      result.hurwitz_numerator = toInt64(numerator(*values.hurwitz));
      result.hurwitz_denominator = toInt64(denominator(*values.hurwitz));
    }
    result.match = values.oracle && values.hurwitz && colhur::Rational(*values.oracle) == *values.hurwitz;
    *out = result;
    return COLHUR_OK;
  });
}

colhur_status colhur_constant_json(colhur_context* ctx, const char* lambda, const char* mu, const char* nu,
                                   colhur_method method, colhur_buffer** out) {
  return guarded([&] {
    requireArgs(ctx && out);
    const ConstantValues values = computeConstant(ctx, lambda, mu, nu, method);
    colhur::Json json;
    json["lambda"] = colhur::formatNeckMess(colhur::parseNeckMess(lambda));
    json["mu"] = colhur::formatNeckMess(colhur::parseNeckMess(mu));
    json["nu"] = colhur::formatNeckMess(colhur::parseNeckMess(nu));
    json["oracle"] = values.oracle ? colhur::Json(*values.oracle) : colhur::Json(nullptr);
    json["hurwitz"] = values.hurwitz ? colhur::rationalToJson(*values.hurwitz) : colhur::Json(nullptr);
    if (values.oracle && values.hurwitz) {
      json["match"] = colhur::Rational(*values.oracle) == *values.hurwitz;
    } else {
      json["match"] = nullptr;
    }
    *out = makeBuffer(json.dump(2) + "\n");
    return COLHUR_OK;
  });
}

colhur_status colhur_table(colhur_context* ctx, int verify, colhur_buffer** json, colhur_buffer** csv) {
  return guarded([&] {
    requireArgs(ctx && json);
    if (verify && ctx->coloring.degree() > ctx->limits.maxVerifyDegree) {
      throw colhur::CapExceeded("Hurwitz verification supports N <= " + std::to_string(ctx->limits.maxVerifyDegree));
    }
    const colhur::StructureTable table = colhur::multiplicationTable(ctx->coloring, verify != 0, ctx->limits);
    *json = makeBuffer(colhur::tableJson(table).dump(2) + "\n");
    if (csv) *csv = makeBuffer(colhur::tableCsv(table));
    return COLHUR_OK;
  });
}

colhur_status colhur_surfaces_json(colhur_context* ctx, const char* lambda, const char* mu, const char* nu,
                                   colhur_buffer** out) {
  return guarded([&] {
    requireArgs(ctx && out);
    const auto classes = colhur::enumerateSurfaceClasses(parseFor(ctx, lambda, "lambda"), parseFor(ctx, mu, "mu"),
                                                         parseFor(ctx, nu, "nu"), ctx->coloring, ctx->limits);
    *out = makeBuffer(colhur::surfacesJson(ctx->coloring, classes).dump(2) + "\n");
    return COLHUR_OK;
  });
}

colhur_status colhur_verify(colhur_context* ctx, uint64_t seed, colhur_buffer** text, colhur_buffer** json) {
  return guarded([&] {
    requireArgs(ctx && text);
    colhur::VerifyOptions options;
    options.seed = seed;
    const colhur::VerifyReport report = colhur::runVerify(ctx->coloring, options, ctx->limits);
    *text = makeBuffer(report.text());
    if (json) *json = makeBuffer(report.json().dump(2) + "\n");
    if (report.passed()) return COLHUR_OK;
    return record(COLHUR_ERR_VERIFY, "verification failed; see report");
  });
}

const char* colhur_buffer_data(const colhur_buffer* buffer) { return buffer ? buffer->data.c_str() : ""; }

size_t colhur_buffer_size(const colhur_buffer* buffer) { return buffer ? buffer->data.size() : 0; }

void colhur_buffer_destroy(colhur_buffer* buffer) { delete buffer; }

}  // extern "C"
