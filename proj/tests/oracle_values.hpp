// Generated by tests/oracle/freeze_constants.py (mpmath, 50 digits).
#pragma once

namespace qhe::oracle {

inline constexpr double kEnergyLevelReduced = 4.9348022005446793094;
inline constexpr double kAlphaElectron1nm = 1.5061668487136781973e-20;
inline constexpr double kMeanX2n1 = 1.1306909660486577904;
inline constexpr double kMeanP2n1 = 2.4674011002723396547;
inline constexpr double kProductN1 = 0.56786180838661197839;
inline constexpr double kX12 = -0.36025309739497874291;
inline constexpr double kP12 = 1.3333333333333333333;
inline constexpr double kSumExpNegSquares = 0.38631860241332607652;
inline constexpr double kErfc1 = 0.15729920705028513066;
inline constexpr double kGaussMinusExact001 = 0.5;
inline constexpr double kMeanEnergyGauss320 = 2.2090384e-21;
inline constexpr double kVarXErfcHalf = 0.29956684495068229607;
inline constexpr double kVarXSimplifiedHalf = 0.43790865975771427256;
inline constexpr double kVarPnbar1 = 3.8757845850374775219;
inline constexpr double kEigenCentralN1 = 2.5980920663209974452;
inline constexpr double kDwUpperN1 = 4.0604605158687709335;
inline constexpr double kThermalUpper1nm320 = 4.0687219804219285017e-18;
inline constexpr double kCt001 = -1.4672140138001584887;
inline constexpr double kZa5nm = 1.899910430808929393;
inline constexpr double kZb5nm = 1.3999104973368285161;
inline constexpr double kQab5nm = -3.526454063163698183e-22;
inline constexpr double kQbc5nm = -1.3667814155453802785e-21;
inline constexpr double kQcd5nm = -2.2482162165115983894e-22;
inline constexpr double kQda5nm = 1.8436366872775972612e-21;

}  // namespace qhe::oracle
