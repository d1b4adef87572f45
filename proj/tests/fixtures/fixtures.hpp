// Frozen extended-precision oracle values.
// Generated by generate_fixtures.py (mpmath, 60 digits); do not edit by hand.
#pragma once
#include <complex>

namespace fixtures {

using cplx = std::complex<double>;

// log_gamma oracle points (principal/analytic continuation)
inline const cplx lg_a_z{3.70000000000000018e+00, 2.10000000000000009e+00};
inline const cplx lg_a_val{7.85346958073822154e-01, 2.58301292511526182e+00};
inline const cplx lg_b_z{-1.50000000000000000e+00, 5.00000000000000000e-01};
inline const cplx lg_b_val{8.15467152518234645e-04, -5.92676579150754712e+00};
inline const cplx lg_c_z{2.50000000000000000e-01, -3.00000000000000000e+00};
inline const cplx lg_c_val{-4.06721940913741165e+00, 9.33843133931693825e-02};
inline const cplx lg_d_z{9.95000000000000051e-02, -4.89999999999999991e-01};
inline const cplx lg_d_val{4.80998738041943596e-01, 1.54515017290560608e+00};
inline const cplx lg_e_z{5.00000000000000000e-01, 7.00000000000000000e+02};
inline const cplx lg_e_val{-1.09863849022322302e+03, 3.88575629405419977e+03};
inline const cplx lg_f_z{9.00250000000000000e+02, -4.00000000000000000e+01};
inline const cplx lg_f_val{5.22048477212182570e+03, -2.72097848171327087e+02};

// Kummer Phi(a, b, -2 i rho) oracle table; a = s - i beta and a+1 rows
struct KummerPoint { cplx a; double b; double rho; cplx phi; };
inline const KummerPoint kummer_points[] = {
  {{9.95000000000000051e-02, -4.89999999999999991e-01}, 1.19900000000000007e+00, 5.00000000000000000e-01, {6.36008722594796017e-01, 1.39422718564028384e-02}},
  {{9.95000000000000051e-02, -4.89999999999999991e-01}, 1.19900000000000007e+00, 5.00000000000000000e+00, {1.61152710789759235e-01, 4.04362539323132153e-01}},
  {{9.95000000000000051e-02, -4.89999999999999991e-01}, 1.19900000000000007e+00, 1.10000000000000000e+01, {8.16237771452756056e-03, 3.94739568581210565e-01}},
  {{9.95000000000000051e-02, -4.89999999999999991e-01}, 1.19900000000000007e+00, 1.45000000000000000e+01, {-3.62901927523164650e-02, 3.79299365087643614e-01}},
  {{9.95000000000000051e-02, -4.89999999999999991e-01}, 1.19900000000000007e+00, 2.20000000000000000e+01, {-1.09645837744904606e-01, 3.40007545934138122e-01}},
  {{9.95000000000000051e-02, -4.89999999999999991e-01}, 1.19900000000000007e+00, 2.80000000000000000e+01, {-1.44070838879170965e-01, 3.18178927064653894e-01}},
  {{9.95000000000000051e-02, -4.89999999999999991e-01}, 1.19900000000000007e+00, 3.10000000000000000e+01, {-1.57676137635491848e-01, 3.08039904053249824e-01}},
  {{9.95000000000000051e-02, -4.89999999999999991e-01}, 1.19900000000000007e+00, 5.00000000000000000e+01, {-2.15886731884941507e-01, 2.51312899657517907e-01}},
  {{9.95000000000000051e-02, -4.89999999999999991e-01}, 1.19900000000000007e+00, 1.00000000000000000e+02, {-2.68329428293029915e-01, 1.55044505477724026e-01}},
  {{9.95000000000000051e-02, -4.89999999999999991e-01}, 1.19900000000000007e+00, 2.50000000000000000e+03, {-1.12093602019450983e-01, -1.95519737673541888e-01}},
  {{9.95000000000000051e-02, -4.89999999999999991e-01}, 1.19900000000000007e+00, 5.00000000000000000e+03, {-3.78416617592611179e-02, -2.06912903630452977e-01}},
  {{1.09949999999999992e+00, -4.89999999999999991e-01}, 1.19900000000000007e+00, 5.00000000000000000e-01, {3.31904962140751603e-01, -5.42715927781310170e-01}},
  {{1.09949999999999992e+00, -4.89999999999999991e-01}, 1.19900000000000007e+00, 5.00000000000000000e+00, {8.47631063874382529e-02, 4.26959570917775810e-01}},
  {{1.09949999999999992e+00, -4.89999999999999991e-01}, 1.19900000000000007e+00, 1.10000000000000000e+01, {-4.66809595409126230e-03, 3.94796352938826256e-01}},
  {{1.09949999999999992e+00, -4.89999999999999991e-01}, 1.19900000000000007e+00, 1.45000000000000000e+01, {2.78863062874860901e-01, 2.59654344485011901e-01}},
  {{1.09949999999999992e+00, -4.89999999999999991e-01}, 1.19900000000000007e+00, 2.20000000000000000e+01, {-1.15647445303714916e-01, -3.38013327284089893e-01}},
  {{1.09949999999999992e+00, -4.89999999999999991e-01}, 1.19900000000000007e+00, 2.80000000000000000e+01, {4.30224015853393899e-02, -3.46616948814093884e-01}},
  {{1.09949999999999992e+00, -4.89999999999999991e-01}, 1.19900000000000007e+00, 3.10000000000000000e+01, {1.21501142848817661e-01, -3.24018238923695689e-01}},
  {{1.09949999999999992e+00, -4.89999999999999991e-01}, 1.19900000000000007e+00, 5.00000000000000000e+01, {-5.89069856266648192e-02, -3.26029479622027718e-01}},
  {{1.09949999999999992e+00, -4.89999999999999991e-01}, 1.19900000000000007e+00, 1.00000000000000000e+02, {4.67315727553640602e-03, -3.09867136637582752e-01}},
  {{1.09949999999999992e+00, -4.89999999999999991e-01}, 1.19900000000000007e+00, 2.50000000000000000e+03, {-2.10504277705351073e-01, -8.05039905928528615e-02}},
  {{1.09949999999999992e+00, -4.89999999999999991e-01}, 1.19900000000000007e+00, 5.00000000000000000e+03, {-2.72044192081923458e-02, -2.08578188286868527e-01}},
  {{5.00000000000000000e-01, -2.06000000000000003e-02}, 2.00000000000000000e+00, 5.00000000000000000e-01, {9.30264466038919546e-01, -2.34049094166460442e-01}},
  {{5.00000000000000000e-01, -2.06000000000000003e-02}, 2.00000000000000000e+00, 5.00000000000000000e+00, {2.64768727958852701e-01, -2.43244212658909914e-01}},
  {{5.00000000000000000e-01, -2.06000000000000003e-02}, 2.00000000000000000e+00, 1.10000000000000000e+01, {1.79965839805805466e-01, -1.56101286164658737e-01}},
  {{5.00000000000000000e-01, -2.06000000000000003e-02}, 2.00000000000000000e+00, 1.45000000000000000e+01, {1.54054561009507290e-01, -1.35486360682454204e-01}},
  {{5.00000000000000000e-01, -2.06000000000000003e-02}, 2.00000000000000000e+00, 2.20000000000000000e+01, {1.24574495914843555e-01, -1.04971462845845562e-01}},
  {{5.00000000000000000e-01, -2.06000000000000003e-02}, 2.00000000000000000e+00, 2.80000000000000000e+01, {1.10572816888104192e-01, -9.34869177634474607e-02}},
  {{5.00000000000000000e-01, -2.06000000000000003e-02}, 2.00000000000000000e+00, 3.10000000000000000e+01, {1.05282576278384540e-01, -8.90167547741021747e-02}},
  {{5.00000000000000000e-01, -2.06000000000000003e-02}, 2.00000000000000000e+00, 5.00000000000000000e+01, {8.38502717951381121e-02, -6.92466043059944830e-02}},
  {{5.00000000000000000e-01, -2.06000000000000003e-02}, 2.00000000000000000e+00, 1.00000000000000000e+02, {6.00921279993946941e-02, -4.83524089039175792e-02}},
  {{5.00000000000000000e-01, -2.06000000000000003e-02}, 2.00000000000000000e+00, 2.50000000000000000e+03, {1.26585943427750224e-02, -8.86113645964740557e-03}},
  {{5.00000000000000000e-01, -2.06000000000000003e-02}, 2.00000000000000000e+00, 5.00000000000000000e+03, {9.04050367422372554e-03, -6.13762809972767144e-03}},
  {{1.50000000000000000e+00, -2.06000000000000003e-02}, 2.00000000000000000e+00, 5.00000000000000000e-01, {6.99569557829669564e-01, -6.56333291105073657e-01}},
  {{1.50000000000000000e+00, -2.06000000000000003e-02}, 2.00000000000000000e+00, 5.00000000000000000e+00, {-3.54489888208172066e-01, -6.00595159417689275e-02}},
  {{1.50000000000000000e+00, -2.06000000000000003e-02}, 2.00000000000000000e+00, 1.10000000000000000e+01, {-1.81340490659491343e-01, -1.54502237804649417e-01}},
  {{1.50000000000000000e+00, -2.06000000000000003e-02}, 2.00000000000000000e+00, 1.45000000000000000e+01, {-2.05155014143671571e-01, 8.84234424793307536e-04}},
  {{1.50000000000000000e+00, -2.06000000000000003e-02}, 2.00000000000000000e+00, 2.20000000000000000e+01, {1.26413173142118335e-01, 1.02749806328649204e-01}},
  {{1.50000000000000000e+00, -2.06000000000000003e-02}, 2.00000000000000000e+00, 2.80000000000000000e+01, {4.55847550949150804e-02, 1.37434281496344346e-01}},
  {{1.50000000000000000e+00, -2.06000000000000003e-02}, 2.00000000000000000e+00, 3.10000000000000000e+01, {5.10910238399740584e-03, 1.37776269985641325e-01}},
  {{1.50000000000000000e+00, -2.06000000000000003e-02}, 2.00000000000000000e+00, 5.00000000000000000e+01, {3.72415706313206155e-02, 1.02171550369669281e-01}},
  {{1.50000000000000000e+00, -2.06000000000000003e-02}, 2.00000000000000000e+00, 1.00000000000000000e+02, {-1.29498838833286070e-02, 7.60349906405964476e-02}},
  {{1.50000000000000000e+00, -2.06000000000000003e-02}, 2.00000000000000000e+00, 2.50000000000000000e+03, {-6.79662081997865850e-03, 1.38768042257884795e-02}},
  {{1.50000000000000000e+00, -2.06000000000000003e-02}, 2.00000000000000000e+00, 5.00000000000000000e+03, {-1.04837115660991048e-02, -3.08106753789319683e-03}},
  {{1.50000000000000000e+00, -2.99999999999999989e-01}, 4.00000000000000000e+00, 5.00000000000000000e-01, {8.43311349735687998e-01, -3.29406053593056303e-01}},
  {{1.50000000000000000e+00, -2.99999999999999989e-01}, 4.00000000000000000e+00, 5.00000000000000000e+00, {3.77845485496147151e-03, -9.93342389612861254e-02}},
  {{1.50000000000000000e+00, -2.99999999999999989e-01}, 4.00000000000000000e+00, 1.10000000000000000e+01, {2.83553813729235183e-03, -2.83307647945105663e-02}},
  {{1.50000000000000000e+00, -2.99999999999999989e-01}, 4.00000000000000000e+00, 1.45000000000000000e+01, {2.23901027602641965e-03, -1.91823702103288696e-02}},
  {{1.50000000000000000e+00, -2.99999999999999989e-01}, 4.00000000000000000e+00, 2.20000000000000000e+01, {1.55718161334050982e-03, -9.56807643223027589e-03}},
  {{1.50000000000000000e+00, -2.99999999999999989e-01}, 4.00000000000000000e+00, 2.80000000000000000e+01, {1.52814077849923436e-03, -6.68015554872393013e-03}},
  {{1.50000000000000000e+00, -2.99999999999999989e-01}, 4.00000000000000000e+00, 3.10000000000000000e+01, {1.48685579992951632e-03, -5.72671708287832062e-03}},
  {{1.50000000000000000e+00, -2.99999999999999989e-01}, 4.00000000000000000e+00, 5.00000000000000000e+01, {1.09779662136492789e-03, -2.64179804635532745e-03}},
  {{1.50000000000000000e+00, -2.99999999999999989e-01}, 4.00000000000000000e+00, 1.00000000000000000e+02, {5.70653424779357264e-04, -8.40303616474143687e-04}},
  {{1.50000000000000000e+00, -2.99999999999999989e-01}, 4.00000000000000000e+00, 2.50000000000000000e+03, {8.14319110989295405e-06, -1.01581715115389672e-07}},
  {{1.50000000000000000e+00, -2.99999999999999989e-01}, 4.00000000000000000e+00, 5.00000000000000000e+03, {2.82516428755493767e-06, 5.58122951886249549e-07}},
  {{2.50000000000000000e+00, -2.99999999999999989e-01}, 4.00000000000000000e+00, 5.00000000000000000e-01, {7.32828703145597338e-01, -5.31643181638513429e-01}},
  {{2.50000000000000000e+00, -2.99999999999999989e-01}, 4.00000000000000000e+00, 5.00000000000000000e+00, {-5.72103169217678675e-02, -8.12929725672505987e-02}},
  {{2.50000000000000000e+00, -2.99999999999999989e-01}, 4.00000000000000000e+00, 1.10000000000000000e+01, {-3.08619142067026843e-03, -2.83045567512529676e-02}},
  {{2.50000000000000000e+00, -2.99999999999999989e-01}, 4.00000000000000000e+00, 1.45000000000000000e+01, {-1.44049793471242773e-02, -1.28636333868463234e-02}},
  {{2.50000000000000000e+00, -2.99999999999999989e-01}, 4.00000000000000000e+00, 2.20000000000000000e+01, {1.72631098885393818e-03, 9.53901208510023538e-03}},
  {{2.50000000000000000e+00, -2.99999999999999989e-01}, 4.00000000000000000e+00, 2.80000000000000000e+01, {-2.18020138088702038e-03, 6.49664639124199889e-03}},
  {{2.50000000000000000e+00, -2.99999999999999989e-01}, 4.00000000000000000e+00, 3.10000000000000000e+01, {-3.23167069224010841e-03, 4.95604007792822127e-03}},
  {{2.50000000000000000e+00, -2.99999999999999989e-01}, 4.00000000000000000e+00, 5.00000000000000000e+01, {-3.91065016888589604e-04, 2.83395880213051145e-03}},
  {{2.50000000000000000e+00, -2.99999999999999989e-01}, 4.00000000000000000e+00, 1.00000000000000000e+02, {-4.55819561852974404e-04, 9.07735658715739190e-04}},
  {{2.50000000000000000e+00, -2.99999999999999989e-01}, 4.00000000000000000e+00, 2.50000000000000000e+03, {1.15913506486599969e-06, 8.06091100301222308e-06}},
  {{2.50000000000000000e+00, -2.99999999999999989e-01}, 4.00000000000000000e+00, 5.00000000000000000e+03, {-2.51942493774386572e-06, 1.39483062203707705e-06}},
  {{2.50000000000000000e+00, -6.60000000000000031e-01}, 6.00000000000000000e+00, 5.00000000000000000e-01, {8.04677419508703196e-01, -3.54592300302746744e-01}},
  {{2.50000000000000000e+00, -6.60000000000000031e-01}, 6.00000000000000000e+00, 5.00000000000000000e+00, {-2.55210584546579217e-02, -2.45919425926209440e-02}},
  {{2.50000000000000000e+00, -6.60000000000000031e-01}, 6.00000000000000000e+00, 1.10000000000000000e+01, {-3.58058220044940286e-03, -4.10256042623826159e-03}},
  {{2.50000000000000000e+00, -6.60000000000000031e-01}, 6.00000000000000000e+00, 1.45000000000000000e+01, {-1.57394818031781659e-03, -2.52234906729579666e-03}},
  {{2.50000000000000000e+00, -6.60000000000000031e-01}, 6.00000000000000000e+00, 2.20000000000000000e+01, {-5.19093208370388745e-04, -9.81010244430301995e-04}},
  {{2.50000000000000000e+00, -6.60000000000000031e-01}, 6.00000000000000000e+00, 2.80000000000000000e+01, {-2.03053461576575134e-04, -5.73263450971449383e-04}},
  {{2.50000000000000000e+00, -6.60000000000000031e-01}, 6.00000000000000000e+00, 3.10000000000000000e+01, {-1.28648457065160167e-04, -4.53540415001890869e-04}},
  {{2.50000000000000000e+00, -6.60000000000000031e-01}, 6.00000000000000000e+00, 5.00000000000000000e+01, {-1.12615386145850840e-06, -1.38472086554417738e-04}},
  {{2.50000000000000000e+00, -6.60000000000000031e-01}, 6.00000000000000000e+00, 1.00000000000000000e+02, {1.00822750462589696e-05, -2.21008146929872954e-05}},
  {{2.50000000000000000e+00, -6.60000000000000031e-01}, 6.00000000000000000e+00, 2.50000000000000000e+03, {4.44495702290184253e-09, 6.38789055672963677e-09}},
  {{2.50000000000000000e+00, -6.60000000000000031e-01}, 6.00000000000000000e+00, 5.00000000000000000e+03, {2.07214508479952130e-10, 1.35961302905301414e-09}},
  {{3.50000000000000000e+00, -6.60000000000000031e-01}, 6.00000000000000000e+00, 5.00000000000000000e-01, {7.33148197381626399e-01, -4.85525663150003395e-01}},
  {{3.50000000000000000e+00, -6.60000000000000031e-01}, 6.00000000000000000e+00, 5.00000000000000000e+00, {8.03545761303408983e-03, -3.45183934457263392e-02}},
  {{3.50000000000000000e+00, -6.60000000000000031e-01}, 6.00000000000000000e+00, 1.10000000000000000e+01, {3.54412890492010729e-03, -4.13409255465103931e-03}},
  {{3.50000000000000000e+00, -6.60000000000000031e-01}, 6.00000000000000000e+00, 1.45000000000000000e+01, {-4.96512521243422074e-04, -2.93138755674889236e-03}},
  {{3.50000000000000000e+00, -6.60000000000000031e-01}, 6.00000000000000000e+00, 2.20000000000000000e+01, {-5.01646101079046189e-04, 9.90045477705774838e-04}},
  {{3.50000000000000000e+00, -6.60000000000000031e-01}, 6.00000000000000000e+00, 2.80000000000000000e+01, {-4.72235423673769781e-04, 3.83217167028801367e-04}},
  {{3.50000000000000000e+00, -6.60000000000000031e-01}, 6.00000000000000000e+00, 3.10000000000000000e+01, {-4.21893977174939117e-04, 2.10368261790712456e-04}},
  {{3.50000000000000000e+00, -6.60000000000000031e-01}, 6.00000000000000000e+00, 5.00000000000000000e+01, {-7.10886106117690681e-05, 1.18836847898882398e-04}},
  {{3.50000000000000000e+00, -6.60000000000000031e-01}, 6.00000000000000000e+00, 1.00000000000000000e+02, {-1.43886215990450840e-05, 1.95720680737032177e-05}},
  {{3.50000000000000000e+00, -6.60000000000000031e-01}, 6.00000000000000000e+00, 2.50000000000000000e+03, {6.99851590283825012e-09, 3.40346350912129004e-09}},
  {{3.50000000000000000e+00, -6.60000000000000031e-01}, 6.00000000000000000e+00, 5.00000000000000000e+03, {2.18216898368202728e-10, 1.35789057974560727e-09}},
};

// Phi(0.5-0.2i, 2.0, -2i*50), moderate-|z| oracle
inline const cplx phi_spec_val{8.32422779734817431e-02, 1.13462804211021742e-02};

// F(1, 1/2 - i beta; 3/2 + i beta; e^{i theta}) oracle points
struct GaussPoint { double beta; double theta; cplx value; };
inline const GaussPoint gauss_points[] = {
  {1.00000000000000006e-01, 1.57079632679489656e+00, {9.24092642530033093e-01, 2.86866331043259593e-01}},
  {2.00000000000000011e-01, 3.92699081698724139e-01, {1.72546421855350740e+00, 3.34566818108307573e-01}},
  {2.00000000000000011e-01, 5.89048622548086254e+00, {9.39930656604711867e-01, -5.33916929171829535e-01}},
  {5.00000000000000028e-02, 9.81747704246810349e-02, {2.08758436007128578e+00, 5.17240430639460569e-01}},
  {6.60000000000000031e-01, 3.14159265358979312e+00, {8.36263106842878634e-01, 3.01868848390673461e-01}},
  {-2.00000000000000011e-01, 2.35619449019234484e+00, {7.67138013513910422e-01, 2.11354928945217437e-02}},
  {0.00000000000000000e+00, 3.14159265358979312e+00, {7.85398163397448279e-01, 1.62961452213657646e-62}},
};

// exact channel factor, two_j=1, Z=1 electron, E/mu c^2 = 1.25, default alpha
inline const cplx s_exact_two_j1{9.99073067048750985e-01, 4.30465642973037188e-02};
// small-gamma channel factor, two_j=-1, gamma=0.01, v/c=0.6
inline const cplx s_small_two_jm1{9.99785391691182079e-01, 5.44192172627722126e-03};
// nonrelativistic factor Gamma(1/2-0.2i)/Gamma(1/2+0.2i)
inline const cplx s_nonrel_m0_b02{7.35613142382690710e-01, 6.77401878321770901e-01};
// exponent s for two_j=3, gamma = default alpha
inline const double s_exp_two_j3_alpha = 1.49998224944344405e+00;

// closed-form amplitude fixtures
inline const cplx f0_pi_b02_k075{2.41142054972381198e-01, 1.26897400460865090e-01};
inline const cplx f1_halfpi_Z1{-2.43205732227854852e-03, -2.54385988509189158e-03};
inline const cplx f1_pi_b02_bp016{-4.82284109944762368e-02, -2.53794800921730186e-02};
inline const cplx f_pi_Z1{1.40708532688323066e-02, 4.34860009941328272e-04};
inline const double sigma_classical_halfpi_Z1 = 5.07831163286965909e-04;

// radial Kummer solution at rho=1, two_j=1, Z=1 electron, eps=1.25, default alpha
inline const cplx u_rho1_two_j1{4.07943390124009209e-01, 8.83886986801266428e-01};
inline const cplx v_rho1_two_j1{9.72444068410353579e-01, 4.50172055553342693e-02};

// kinematics at energy_ratio = 1 + 1e-6, Z=1 electron, default alpha
inline const double kin_thr_v = 1.41421250165576855e-03;
inline const double kin_thr_k = 1.41421391586827021e-03;
inline const double kin_thr_beta = 5.16001135982967885e+00;
inline const double kin_thr_beta_p = 5.16000619982347963e+00;

}  // namespace fixtures
