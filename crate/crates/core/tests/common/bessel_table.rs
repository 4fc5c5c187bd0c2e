// Reference values for the cylinder-function certification grid.
// Generated by tools/oracle_bessel.py: 50-digit power-series summation
// (ascending series for J, logarithmic/digamma series for Y), each value
// cross-checked against mpmath besselj/bessely before freezing.
// Columns: (order, z_re, z_im, j_re, j_im, h1_re, h1_im).

pub const BESSEL_REFERENCE: [(i32, f64, f64, f64, f64, f64, f64); 60] = [
    (0, 0.50000000000000000, 0.0, 0.93846980724081290, 0.0, 0.93846980724081290, -0.44451873350670656),
    (0, 1.0000000000000000, 0.0, 0.76519768655796655, 0.0, 0.76519768655796655, 0.088256964215676958),
    (1, 1.0000000000000000, 0.0, 0.44005058574493352, 0.0, 0.44005058574493352, -0.78121282130028872),
    (2, 1.0000000000000000, 0.0, 0.11490348493190048, 0.0, 0.11490348493190048, -1.6506826068162544),
    (0, 3.0000000000000000, 0.0, -0.26005195490193344, 0.0, -0.26005195490193344, 0.37685001001279038),
    (1, 3.0000000000000000, 0.0, 0.33905895852593646, 0.0, 0.33905895852593646, 0.32467442479179998),
    (5, 3.0000000000000000, 0.0, 0.043028434877047584, 0.0, 0.043028434877047584, -1.9059459538286737),
    (0, 7.0000000000000000, 0.0, 0.30007927051955560, 0.0, 0.30007927051955560, -0.025949743967209265),
    (2, 7.0000000000000000, 0.0, -0.30141722008594012, 0.0, -0.30141722008594012, -0.060526609468272127),
    (8, 7.0000000000000000, 0.0, 0.12797053402821254, 0.0, 0.12797053402821254, -0.61143524692126573),
    (0, 12.500000000000000, 0.0, 0.14688405470042110, 0.0, 0.14688405470042110, -0.17121430684466929),
    (1, 12.500000000000000, 0.0, -0.16548380461475972, 0.0, -0.16548380461475972, -0.15383825653750118),
    (5, 12.500000000000000, 0.0, 0.034737699762239728, 0.0, 0.034737699762239728, -0.23290393783115079),
    (0, 20.000000000000000, 0.0, 0.16702466434058315, 0.0, 0.16702466434058315, 0.062640596809383831),
    (3, 20.000000000000000, 0.0, -0.098901394560449676, 0.0, -0.098901394560449676, 0.14967326271339410),
    (10, 20.000000000000000, 0.0, 0.18648255802394508, 0.0, 0.18648255802394508, -0.043894653515658395),
    (0, 30.000000000000000, 0.0, -0.086367983581040211, 0.0, -0.086367983581040211, -0.11729573168666403),
    (1, 30.000000000000000, 0.0, -0.11875106261662294, 0.0, -0.11875106261662294, 0.084425570661747235),
    (16, 30.000000000000000, 0.0, -0.089065076267013956, 0.0, -0.089065076267013956, 0.13089604585372135),
    (32, 10.000000000000000, 0.0, 4.1122714910257672e-14, 0.0, 4.1122714910257672e-14, -254660337729.34796),
    (0, 0.0, 0.50000000000000000, 1.0634833707413235, 0.0, 2.6727647100921956e-51, -0.58850345869720760),
    (1, 0.0, 0.50000000000000000, 0.0, 0.25789430539089632, -1.0545231687568029, 6.6819117752304891e-52),
    (0, 0.0, 2.0000000000000000, 2.2795853023360673, 0.0, 5.3455294201843913e-51, -0.072507091343870252),
    (2, 0.0, 2.0000000000000000, -0.68894844769873820, 0.0, -1.3363823550460978e-51, 0.16154847718789579),
    (0, 0.0, 8.0000000000000000, 427.56411572180479, 0.0, 6.8422776578360209e-49, -9.3246147017467839e-5),
    (1, 0.0, 8.0000000000000000, 0.0, 399.87313678256010, -9.8911112252230354e-5, 6.8422776578360209e-49),
    (5, 0.0, 8.0000000000000000, 0.0, 85.535805257921246, -0.00039429555596738830, 1.7105694144590052e-49),
    (10, 0.0, 8.0000000000000000, -1.1456174093591642, 0.0, -2.6727647100921956e-51, 0.021683294942614656),
    (0, 0.0, 15.000000000000000, 339649.37329791388, 0.0, 7.0064923216240854e-46, -6.2513110801783786e-8),
    (2, 0.0, 15.000000000000000, -295899.38370188636, 0.0, -7.0064923216240854e-46, 7.1121678058839195e-8),
    (0, 0.0, 30.000000000000000, 781672297823.97749, 0.0, 1.4693679385278594e-39, -1.3575773383773007e-14),
    (1, 0.0, 30.000000000000000, 0.0, 768532038938.95700, -1.3800210535981196e-14, 1.4693679385278594e-39),
    (10, 0.0, 30.000000000000000, -145831809975.96712, 0.0, -3.6734198463196485e-40, 6.9027516535813440e-14),
    (32, 0.0, 2.0000000000000000, 3.9172639317691194e-36, 0.0, 8.0430587335437952e-87, -2.5343694071553771e+33),
    (0, 1.0000000000000000, 1.0000000000000000, 0.93760847680602928, -0.49652994760912213, 0.22744989480229476, -0.051055458673089618),
    (1, 1.0000000000000000, 1.0000000000000000, 0.61416033492290361, 0.36502802882708779, -0.015640669069980772, -0.29266650676425745),
    (2, 3.0000000000000000, 2.0000000000000000, 1.2213090988782013, 0.12594627238464972, 0.050860554682678598, -0.058286073266444090),
    (5, 3.0000000000000000, 2.0000000000000000, -0.098857989848691880, 0.085924662562920430, -0.41544402886158338, 0.27392555689957019),
    (0, 2.0000000000000000, -2.0000000000000000, 0.027654478380304578, 1.7799949648342147, 0.011760098111550401, 3.6045366373257848),
    (1, 2.0000000000000000, -2.0000000000000000, 1.6170187883495027, 0.27260958229437976, 3.1791046324802859, 0.50133651068267545),
    (3, 5.0000000000000000, 5.0000000000000000, 13.312606095786486, -5.2357260622251660, 0.0027503783384564365, -0.0014966713342320683),
    (0, 10.000000000000000, 3.0000000000000000, -2.4856749376593353, -0.18711053558356889, -0.011431012375382656, 0.0043946270039564721),
    (4, 10.000000000000000, 3.0000000000000000, -1.5977942737581264, 1.2926483991553240, -0.014864965156594770, -0.0053972119974707470),
    (0, -4.0000000000000000, 9.0000000000000000, -833.99348266412648, -625.60374529923800, 2.7108640318732291e-5, 1.5092668116861951e-5),
    (2, -4.0000000000000000, 9.0000000000000000, 638.42209028894336, 576.04949071458495, -3.3680992896055616e-5, -1.5559294581008844e-5),
    (1, 20.000000000000000, 5.0000000000000000, 6.2881238186496491, 11.363863418680365, 0.00030583801921210669, -0.0011497519508627023),
    (6, 20.000000000000000, 5.0000000000000000, -2.4233715195873981, 10.455330071962413, -0.00070840089281116894, -0.0013157355766437146),
    (0, -5.0000000000000000, 20.000000000000000, 6983902.3652421655, -42313571.090645329, 3.3046476461378497e-10, -1.4311763270994299e-10),
    (8, -5.0000000000000000, 20.000000000000000, 4835077.9411608813, -7984724.5539370460, 1.1273944991949130e-9, -1.0676765111251947e-9),
    (0, 2.0000000000000000, -5.0000000000000000, -5.9089829914106861, 25.435965962720144, -11.819824324371211, 50.873236385357727),
    (2, 2.0000000000000000, -5.0000000000000000, 6.8783304419873171, -16.651178901739345, 13.758995898400417, -33.304442066738750),
    (12, 16.000000000000000, 16.000000000000000, 41461.544333762573, 61984.397714219962, -6.0513885958399740e-8, -1.7497608801195737e-7),
    (0, 16.000000000000000, 16.000000000000000, -744070.93541905460, -78186.093465066904, -1.1836740977230286e-8, 1.4609112558225908e-8),
    (1, -0.69999999999999996, 6.0999999999999996, -40.722135491449234, 53.421581028737322, -0.00055218447817266265, 0.00052814772449492403),
    (10, 11.900000000000000, 1.3999999999999999, 0.39438494019385319, -0.0025370636160567108, 0.12171813861407560, -0.046769423067805892),
    (0, 0.0, 9.4247779607693793, 1633.0905220588248, 0.0, 2.7369110631344083e-48, -2.0710560412073941e-5),
    (5, 2.8999999999999999, 2.8999999999999999, -0.31153394794748429, -0.027662606262330728, -0.037535121727890311, 0.18031702569525890),
    (16, 4.0000000000000000, 4.0000000000000000, 7.1917974553587268e-7, -3.6566768504813065e-7, 12475.073284190939, -21156.361287370090),
    (2, 6.2831853071795862, 0.0, -0.28788036751596896, 0.0, -0.28788036751596896, 0.15300880994360964),
    (3, 1.3999999999999999, 0.34999999999999998, 0.043631208958342437, 0.034725564437682674, -1.1667574044816447, -1.7846932908703789),
];
