"""Tabulated CDF of the order-2 Tracy-Widom distribution.

Generated by tools/generate_tw2_table.py (Fredholm determinant of the
Airy kernel, Gauss-Legendre Nystrom discretization). Uniform grid in s;
values are exact to ~1e-13 absolute. Do not edit by hand.
"""

import numpy as np

S_MIN = -6.5
S_STEP = 0.01

CDF = np.array([
    7.9460766233999668e-11, 8.8315820326727633e-11, 9.8125858305586886e-11, 1.0899030050024439e-10,
    1.2101852886030084e-10, 1.3433084409415964e-10, 1.4905951065605854e-10, 1.6534989712673965e-10,
    1.8336172035019892e-10, 2.0327040221903029e-10, 2.2526854877697130e-10, 2.4956756216386218e-10,
    2.7639939660452457e-10, 3.0601847066183708e-10, 3.3870374900887026e-10, 3.7476100782920449e-10,
    4.1452529913602750e-10, 4.5836363072229540e-10, 5.0667787937003746e-10, 5.5990795655379351e-10,
    6.1853524736231650e-10, 6.8308634483274100e-10, 7.5413710367415559e-10, 8.3231703914793803e-10,
    9.1831409867887063e-10, 1.0128798362151268e-09, 1.1168350211061746e-09, 1.2310757159079032e-09,
    1.3565798601044016e-09, 1.4944143992046830e-09, 1.6457430017545482e-09, 1.8118344097641962e-09,
    1.9940714715921610e-09, 2.1939609090137032e-09, 2.4131438754125669e-09, 2.6534073642637468e-09,
    2.9166965324492100e-09, 3.2051280073175014e-09, 3.5210042505739701e-09, 3.8668290578379715e-09,
    4.2453242774403885e-09, 4.6594478387934334e-09, 5.1124131852143359e-09, 5.6077102140245395e-09,
    6.1491278324597298e-09, 6.7407782464613836e-09, 7.3871231048464493e-09, 8.0930016326676427e-09,
    8.8636608931263709e-09, 9.7047883284483694e-09, 1.0622546739416881e-08, 1.1623611872395677e-08,
    1.2715212795148131e-08, 1.3905175252854847e-08, 1.5201968208564280e-08, 1.6614753783869771e-08,
    1.8153440830850060e-08, 1.9828742378352034e-08, 2.1652237212517374e-08, 2.3636435865684937e-08,
    2.5794851304733102e-08, 2.8142074627347490e-08, 3.0693856095175001e-08, 3.3467191846011587e-08,
    3.6480416654646182e-08, 3.9753303130289026e-08, 4.3307167756381842e-08, 4.7164984211971160e-08,
    5.1351504427978328e-08, 5.5893387864511330e-08, 6.0819339519099532e-08, 6.6160257204754264e-08,
    7.1949388667966181e-08, 7.8222499145513081e-08, 8.5018049989918200e-08, 9.2377389036099885e-08,
    1.0034495340373024e-07, 1.0896848547846984e-07, 1.1829926284709456e-07, 1.2839234300958249e-07,
    1.3930682371661077e-07, 1.5110611985205999e-07, 1.6385825779410029e-07, 1.7763618826715939e-07,
    1.9251811871813680e-07, 2.0858786632325345e-07, 2.2593523277799395e-07, 2.4465640207238796e-07,
    2.6485436252033010e-07, 2.8663935437381281e-07, 3.1012934439669151e-07, 3.3545052886677571e-07,
    3.6273786651529860e-07, 3.9213564299413455e-07, 4.2379806853553457e-07, 4.5788991053584990e-07,
    4.9458716287967793e-07, 5.3407775388575069e-07, 5.7656229486215792e-07, 6.2225487131406313e-07,
    6.7138387896326652e-07, 7.2419290679850239e-07, 7.8094166949691058e-07, 8.4190699163711975e-07,
    9.0738384621180286e-07, 9.7768645008376494e-07, 1.0531494190889134e-06, 1.1341289856259301e-06,
    1.2210042816808985e-06, 1.3141786903183669e-06, 1.4140812688269773e-06, 1.5211682467870181e-06,
    1.6359246024687677e-06, 1.7588657210841289e-06, 1.8905391385564768e-06, 2.0315263745536094e-06,
    2.1824448587303181e-06, 2.3439499541863776e-06, 2.5167370823396480e-06, 2.7015439535134603e-06,
    2.8991529076893883e-06, 3.1103933700141643e-06, 3.3361444258104359e-06, 3.5773375199494044e-06,
    3.8349592856191660e-06, 4.1100545076709120e-06, 4.4037292258623239e-06, 4.7171539834457815e-06,
    5.0515672267759995e-06, 5.4082788616675905e-06, 5.7886739724484609e-06, 6.1942167098217950e-06,
    6.6264543537008807e-06, 7.0870215574922221e-06, 7.5776447803039606e-06, 8.1001469138176494e-06,
    8.6564521106208948e-06, 9.2485908210681949e-06, 9.8787050457523384e-06, 1.0549053810881732e-05,
    1.1262018874072435e-05, 1.2020110668015433e-05, 1.2825974489848331e-05, 1.3682396944024478e-05,
    1.4592312646656540e-05, 1.5558811199496264e-05, 1.6585144441754813e-05, 1.7674733988077610e-05,
    1.8831179061245706e-05, 2.0058264628081191e-05, 2.1359969847258916e-05, 2.2740476837822526e-05,
    2.4204179777201315e-05, 2.5755694337725001e-05, 2.7399867470567116e-05, 2.9141787546242451e-05,
    3.0986794860740051e-05, 3.2940492516423973e-05, 3.5008757686920083e-05, 3.7197753275197186e-05,
    3.9513939973981307e-05, 4.1964088737833440e-05, 4.4555293675879299e-05, 4.7294985374625975e-05,
    5.0190944659599011e-05, 5.3251316805258692e-05, 5.6484626201751514e-05, 5.9899791487729791e-05,
    6.3506141157766016e-05, 6.7313429653014797e-05, 7.1331853943822391e-05, 7.5572070612256548e-05,
    8.0045213443095403e-05, 8.4762911530841421e-05, 8.9737307910748356e-05, 9.4981078721251188e-05,
    1.0050745290489250e-04, 1.0633023245483287e-04, 1.1246381321349398e-04, 1.1892320622953243e-04,
    1.2572405967917441e-04, 1.3288268135742059e-04, 1.4041606174412322e-04, 1.4834189764991015e-04,
    1.5667861644593772e-04, 1.6544540088132587e-04, 1.7466221449165191e-04, 1.8434982760104606e-04,
    1.9452984392015921e-04, 2.0522472774154942e-04, 2.1645783173352662e-04, 2.2825342533262547e-04,
    2.4063672373456782e-04, 2.5363391748242382e-04, 2.6727220265046307e-04, 2.8157981162108334e-04,
    2.9658604445150855e-04, 3.1232130082602507e-04, 3.2881711258923781e-04, 3.4610617685404746e-04,
    3.6422238967819085e-04, 3.8320088030129658e-04, 4.0307804593420947e-04, 4.2389158709118819e-04,
    4.4568054345413212e-04, 4.6848533025770441e-04, 4.9234777518282436e-04, 5.1731115574469569e-04,
    5.4342023716088736e-04, 5.7072131068377011e-04, 5.9926223238028573e-04, 6.2909246234113894e-04,
    6.6026310430010470e-04, 6.9282694564329480e-04, 7.2683849778638681e-04, 7.6235403689773359e-04,
    7.9943164494264180e-04, 8.3813125102421464e-04, 8.7851467299353519e-04, 9.2064565930228366e-04,
    9.6458993106842740e-04, 1.0104152243240443e-03, 1.0581913324152776e-03, 1.1079901485197947e-03,
    1.1598857082489931e-03, 1.2139542322989385e-03, 1.2702741691132679e-03, 1.3289262375205876e-03,
    1.3899934693066699e-03, 1.4535612516810717e-03, 1.5197173695967294e-03, 1.5885520478791200e-03,
    1.6601579931212372e-03, 1.7346304352985219e-03, 1.8120671690574331e-03, 1.8925685946301731e-03,
    1.9762377583258952e-03, 2.0631803925493407e-03, 2.1535049552949392e-03, 2.2473226690651531e-03,
    2.3447475591586338e-03, 2.4458964912757036e-03, 2.5508892083845177e-03, 2.6598483667928103e-03,
    2.7728995713680927e-03, 2.8901714098489525e-03, 3.0117954861880124e-03, 3.1379064528690923e-03,
    3.2686420421370165e-03, 3.4041430960807416e-03, 3.5445535955086795e-03, 3.6900206875539864e-03,
    3.8406947119496880e-03, 3.9967292259086833e-03, 4.1582810275491520e-03, 4.3255101777999140e-03,
    4.4985800207252673e-03, 4.6776572022035959e-03, 4.8629116868992867e-03, 5.0545167734635825e-03,
    5.2526491079016675e-03, 5.4574886950443970e-03, 5.6692189080608446e-03, 5.8880264959510834e-03,
    6.1141015889579270e-03, 6.3476377018354627e-03, 6.5888317349158615e-03, 6.8378839729138713e-03,
    7.0949980814109821e-03, 7.3603811009621354e-03, 7.6342434387664214e-03, 7.9167988578488519e-03,
    8.2082644636967978e-03, 8.5088606882994990e-03, 8.8188112715374724e-03, 9.1383432398735014e-03,
    9.4676868822947645e-03, 9.8070757234609320e-03, 1.0156746494011477e-02, 1.0516939097989243e-02,
    1.0887896577340853e-02, 1.1269865073450749e-02, 1.1663093785675182e-02, 1.2067834926839592e-02,
    1.2484343675665985e-02, 1.2912878126101826e-02, 1.3353699233520677e-02, 1.3807070757769626e-02,
    1.4273259203041943e-02, 1.4752533754554167e-02, 1.5245166212008634e-02, 1.5751430919830944e-02,
    1.6271604694166570e-02, 1.6805966746631696e-02, 1.7354798604810259e-02, 1.7918384029495582e-02,
    1.8497008928679750e-02, 1.9090961268290109e-02, 1.9700530979684470e-02, 2.0326009863914217e-02,
    2.0967691492768590e-02, 2.1625871106618989e-02, 2.2300845509083615e-02, 2.2992912958536164e-02,
    2.3702373056488667e-02, 2.4429526632877362e-02, 2.5174675628288838e-02, 2.5938122973162718e-02,
    2.6720172464017405e-02, 2.7521128636738695e-02, 2.8341296636986566e-02, 2.9180982087769310e-02,
    3.0040490954243212e-02, 3.0920129405798465e-02, 3.1820203675493340e-02, 3.2741019916906651e-02,
    3.3682884058477129e-02, 3.4646101655403883e-02, 3.5630977739189482e-02, 3.6637816664901339e-02,
    3.7666921956241141e-02, 3.8718596148507048e-02, 3.9793140629540820e-02, 4.0890855478755081e-02,
    4.2012039304337431e-02, 4.3156989078731792e-02, 4.4325999972501633e-02, 4.5519365186680365e-02,
    4.6737375783720322e-02, 4.7980320517148872e-02, 4.9248485660051626e-02, 5.0542154832493989e-02,
    5.1861608828006590e-02, 5.3207125439251934e-02, 5.4578979283001247e-02, 5.5977441624543087e-02,
    5.7402780201655623e-02, 5.8855259048273684e-02, 6.0335138317977627e-02, 6.1842674107445213e-02,
    6.3378118279994969e-02, 6.4941718289361350e-02, 6.6533717003840101e-02, 6.8154352530939849e-02,
    6.9803858042682423e-02, 7.1482461601692152e-02, 7.3190385988214451e-02, 7.4927848528207552e-02,
    7.6695060922648176e-02, 7.8492229078193712e-02, 8.0319552939344577e-02, 8.2177226322248789e-02,
    8.4065436750290587e-02, 8.5984365291606593e-02, 8.7934186398667055e-02, 8.9915067750068745e-02,
    9.1927170094673605e-02, 9.3970647098235660e-02, 9.6045645192651574e-02, 9.8152303427973694e-02,
    1.0029075332731631e-01, 1.0246111874479351e-01, 1.0466351572661592e-01, 1.0689805237547688e-01,
    1.0916482871835712e-01, 1.1146393657787160e-01, 1.1379545944728167e-01, 1.1615947236929099e-01,
    1.1855604181874949e-01, 1.2098522558937000e-01, 1.2344707268458009e-01, 1.2594162321260943e-01,
    1.2846890828592508e-01, 1.3102894992511313e-01, 1.3362176096730763e-01, 1.3624734497926083e-01,
    1.3890569617514895e-01, 1.4159679933920025e-01, 1.4432062975322998e-01, 1.4707715312916123e-01,
    1.4986632554661344e-01, 1.5268809339562145e-01, 1.5554239332456224e-01, 1.5842915219335019e-01,
    1.6134828703195511e-01, 1.6429970500430691e-01, 1.6728330337763045e-01, 1.7029896949725901e-01,
    1.7334658076696688e-01, 1.7642600463486061e-01, 1.7953709858485489e-01, 1.8267971013376591e-01,
    1.8585367683404178e-01, 1.8905882628214715e-01, 1.9229497613261684e-01, 1.9556193411778539e-01,
    1.9885949807319195e-01, 2.0218745596866786e-01, 2.0554558594508854e-01, 2.0893365635678746e-01,
    2.1235142581961147e-01, 2.1579864326459577e-01, 2.1927504799723752e-01, 2.2278036976232818e-01,
    2.2631432881432095e-01, 2.2987663599318012e-01, 2.3346699280568203e-01, 2.3708509151210097e-01,
    2.4073061521824574e-01, 2.4440323797276770e-01, 2.4810262486969889e-01, 2.5182843215613182e-01,
    2.5558030734498688e-01, 2.5935788933278159e-01, 2.6316080852232560e-01, 2.6698868695025735e-01,
    2.7084113841933211e-01, 2.7471776863537756e-01, 2.7861817534880978e-01, 2.8254194850062136e-01,
    2.8648867037273429e-01, 2.9045791574261298e-01, 2.9444925204202682e-01, 2.9846223951985390e-01,
    3.0249643140880245e-01, 3.0655137409594729e-01, 3.1062660729693836e-01, 3.1472166423377984e-01,
    3.1883607181603607e-01, 3.2296935082534711e-01, 3.2712101610311722e-01, 3.3129057674124673e-01,
    3.3547753627576443e-01, 3.3968139288323740e-01, 3.4390163957980657e-01, 3.4813776442271338e-01,
    3.5238925071417354e-01, 3.5665557720746277e-01, 3.6093621831505796e-01, 3.6523064431869506e-01,
    3.6953832158120248e-01, 3.7385871275994992e-01, 3.7819127702178307e-01, 3.8253547025928003e-01,
    3.8689074530818884e-01, 3.9125655216589877e-01, 3.9563233821079608e-01, 4.0001754842235215e-01,
    4.0441162560180227e-01, 4.0881401059326522e-01, 4.1322414250515122e-01, 4.1764145893172228e-01,
    4.2206539617465139e-01, 4.2649538946443744e-01, 4.3093087318153667e-01, 4.3537128107705808e-01,
    4.3981604649289846e-01, 4.4426460258115635e-01, 4.4871638252270463e-01, 4.5317081974477735e-01,
    4.5762734813743411e-01, 4.6208540226877159e-01, 4.6654441759875692e-01, 4.7100383069154111e-01,
    4.7546307942613752e-01, 4.7992160320533583e-01, 4.8437884316272706e-01, 4.8883424236772821e-01,
    4.9328724602847857e-01, 4.9773730169250274e-01, 5.0218385944501920e-01, 5.0662637210479877e-01,
    5.1106429541744736e-01, 5.1549708824603080e-01, 5.1992421275892331e-01, 5.2434513461479404e-01,
    5.2875932314463414e-01, 5.3316625153072694e-01, 5.3756539698248329e-01, 5.4195624090905192e-01,
    5.4633826908862149e-01, 5.5071097183434059e-01, 5.5507384415677596e-01, 5.5942638592284244e-01,
    5.6376810201113237e-01, 5.6809850246358429e-01, 5.7241710263341727e-01, 5.7672342332929527e-01,
    5.8101699095564208e-01, 5.8529733764907554e-01, 5.8956400141089915e-01, 5.9381652623561954e-01,
    5.9805446223543635e-01, 6.0227736576067858e-01, 6.0648479951614465e-01, 6.1067633267332300e-01,
    6.1485154097846173e-01, 6.1901000685646290e-01, 6.2315131951058700e-01, 6.2727507501794222e-01,
    6.3138087642075269e-01, 6.3546833381339229e-01, 6.3953706442517211e-01, 6.4358669269888802e-01,
    6.4761685036511574e-01, 6.5162717651226654e-01, 6.5561731765240161e-01, 6.5958692778281314e-01,
    6.6353566844339240e-01, 6.6746320876978671e-01, 6.7136922554236977e-01, 6.7525340323104854e-01,
    6.7911543403591701e-01, 6.8295501792379743e-01, 6.8677186266068369e-01, 6.9056568384012784e-01,
    6.9433620490759307e-01, 6.9808315718082248e-01, 7.0180627986624200e-01, 7.0550532007145605e-01,
    7.0918003281386843e-01, 7.1283018102547580e-01, 7.1645553555387942e-01, 7.2005587515956493e-01,
    7.2363098650949731e-01, 7.2718066416709526e-01, 7.3070471057861774e-01, 7.3420293605604325e-01,
    7.3767515875647860e-01, 7.4112120465817466e-01, 7.4454090753319069e-01, 7.4793410891678713e-01,
    7.5130065807360269e-01, 7.5464041196067444e-01, 7.5795323518738000e-01, 7.6123899997235844e-01,
    7.6449758609748386e-01, 7.6772888085895896e-01, 7.7093277901559421e-01, 7.7410918273435525e-01,
    7.7725800153323832e-01, 7.8037915222155185e-01, 7.8347255883767530e-01, 7.8653815258437199e-01,
    7.8957587176172650e-01, 7.9258566169778133e-01, 7.9556747467695033e-01, 7.9852126986628214e-01,
    8.0144701323964929e-01, 8.0434467749993477e-01, 8.0721424199930403e-01, 8.1005569265761657e-01,
    8.1286902187907928e-01, 8.1565422846718882e-01, 8.1841131753806551e-01, 8.2114030043223174e-01,
    8.2384119462492256e-01, 8.2651402363499904e-01, 8.2915881693253668e-01, 8.3177560984516741e-01,
    8.3436444346324479e-01, 8.3692536454390365e-01, 8.3945842541409021e-01, 8.4196368387263576e-01,
    8.4444120309143433e-01, 8.4689105151580701e-01, 8.4931330276411776e-01, 8.5170803552670293e-01,
    8.5407533346419506e-01, 8.5641528510529430e-01, 8.5872798374406722e-01, 8.6101352733682091e-01,
    8.6327201839863765e-01, 8.6550356389961658e-01, 8.6770827516088378e-01, 8.6988626775045463e-01,
    8.7203766137897587e-01, 8.7416257979543321e-01, 8.7626115068286325e-01, 8.7833350555414336e-01,
    8.8037977964790082e-01, 8.8240011182460198e-01, 8.8439464446287508e-01, 8.8636352335611923e-01,
    8.8830689760944326e-01, 8.9022491953699534e-01, 8.9211774455971804e-01, 8.9398553110359424e-01,
    8.9582844049840804e-01, 8.9764663687707857e-01, 8.9944028707561163e-01, 9.0120956053370316e-01,
    9.0295462919603620e-01, 9.0467566741431493e-01, 9.0637285185007410e-01, 9.0804636137829742e-01,
    9.0969637699187478e-01, 9.1132308170694720e-01, 9.1292666046916382e-01, 9.1450730006087144e-01,
    9.1606518900929745e-01, 9.1760051749571558e-01, 9.1911347726565873e-01, 9.2060426154017783e-01,
    9.2207306492819308e-01, 9.2352008333994606e-01, 9.2494551390158286e-01, 9.2634955487088588e-01,
    9.2773240555418612e-01, 9.2909426622445790e-01, 9.3043533804062417e-01, 9.3175582296809012e-01,
    9.3305592370052037e-01, 9.3433584358286292e-01, 9.3559578653565656e-01, 9.3683595698060917e-01,
    9.3805655976747526e-01, 9.3925780010223670e-01, 9.4043988347659424e-01, 9.4160301559878523e-01,
    9.4274740232572118e-01, 9.4387324959646834e-01, 9.4498076336706749e-01, 9.4607014954668966e-01,
    9.4714161393514951e-01, 9.4819536216176126e-01, 9.4923159962555226e-01, 9.5025053143682015e-01,
    9.5125236236005273e-01, 9.5223729675819091e-01, 9.5320553853824019e-01, 9.5415729109823855e-01,
    9.5509275727555210e-01, 9.5601213929652773e-01, 9.5691563872746266e-01, 9.5780345642691578e-01,
    9.5867579249933443e-01, 9.5953284625000090e-01, 9.6037481614128473e-01, 9.6120189975019554e-01,
    9.6201429372723180e-01, 9.6281219375650107e-01, 9.6359579451712618e-01, 9.6436528964590562e-01,
    9.6512087170122485e-01, 9.6586273212821039e-01, 9.6659106122511340e-01, 9.6730604811090493e-01,
    9.6800788069407673e-01, 9.6869674564263575e-01, 9.6937282835526706e-01, 9.7003631293366954e-01,
    9.7068738215603190e-01, 9.7132621745165026e-01, 9.7195299887666020e-01, 9.7256790509087609e-01,
    9.7317111333571715e-01, 9.7376279941320965e-01, 9.7434313766604519e-01, 9.7491230095868109e-01,
    9.7547046065946519e-01, 9.7601778662377237e-01, 9.7655444717812634e-01, 9.7708060910530881e-01,
    9.7759643763041382e-01, 9.7810209640785295e-01, 9.7859774750927997e-01, 9.7908355141242565e-01,
    9.7955966699081898e-01, 9.8002625150438416e-01, 9.8048346059089131e-01, 9.8093144825824241e-01,
    9.8137036687758006e-01, 9.8180036717719688e-01, 9.8222159823722999e-01, 9.8263420748512631e-01,
    9.8303834069184759e-01, 9.8343414196882484e-01, 9.8382175376560999e-01, 9.8420131686823542e-01,
    9.8457297039825165e-01, 9.8493685181242963e-01, 9.8529309690310463e-01, 9.8564183979915665e-01,
    9.8598321296758895e-01, 9.8631734721572617e-01, 9.8664437169396091e-01, 9.8696441389908685e-01,
    9.8727759967816664e-01, 9.8758405323292753e-01, 9.8788389712467728e-01, 9.8817725227970998e-01,
    9.8846423799519711e-01, 9.8874497194554667e-01, 9.8901957018920283e-01, 9.8928814717589453e-01,
    9.8955081575428916e-01, 9.8980768718006296e-01, 9.9005887112435687e-01, 9.9030447568260216e-01,
    9.9054460738371797e-01, 9.9077937119964776e-01, 9.9100887055523368e-01, 9.9123320733840237e-01,
    9.9145248191067148e-01, 9.9166679311792916e-01, 9.9187623830150851e-01, 9.9208091330952308e-01,
    9.9228091250845341e-01, 9.9247632879497916e-01, 9.9266725360803820e-01, 9.9285377694110333e-01,
    9.9303598735466447e-01, 9.9321397198890604e-01, 9.9338781657656317e-01, 9.9355760545595462e-01,
    9.9372342158417004e-01, 9.9388534655041594e-01, 9.9404346058949222e-01, 9.9419784259540311e-01,
    9.9434857013508682e-01, 9.9449571946225590e-01, 9.9463936553133903e-01, 9.9477958201150285e-01,
    9.9491644130077816e-01, 9.9505001454023723e-01, 9.9518037162824780e-01, 9.9530758123478069e-01,
    9.9543171081576209e-01, 9.9555282662747424e-01, 9.9567099374098367e-01, 9.9578627605658931e-01,
    9.9589873631829839e-01, 9.9600843612830681e-01, 9.9611543596148644e-01, 9.9621979517986514e-01,
    9.9632157204710448e-01, 9.9642082374295404e-01, 9.9651760637768771e-01, 9.9661197500651844e-01,
    9.9670398364396684e-01, 9.9679368527820411e-01, 9.9688113188534355e-01, 9.9696637444368186e-01,
    9.9704946294789598e-01, 9.9713044642317117e-01, 9.9720937293926903e-01, 9.9728628962453125e-01,
    9.9736124267980830e-01, 9.9743427739231194e-01, 9.9750543814938941e-01, 9.9757476845221571e-01,
    9.9764231092939271e-01, 9.9770810735046944e-01, 9.9777219863935351e-01, 9.9783462488764030e-01,
    9.9789542536783271e-01, 9.9795463854646416e-01, 9.9801230209711067e-01, 9.9806845291330493e-01,
    9.9812312712132856e-01, 9.9817636009290034e-01, 9.9822818645774947e-01, 9.9827864011606982e-01,
    9.9832775425085407e-01, 9.9837556134011785e-01, 9.9842209316898656e-01, 9.9846738084167619e-01,
    9.9851145479333758e-01, 9.9855434480177796e-01, 9.9859607999906064e-01, 9.9863668888296842e-01,
    9.9867619932834617e-01, 9.9871463859830623e-01, 9.9875203335531004e-01, 9.9878840967211413e-01,
    9.9882379304258351e-01, 9.9885820839237816e-01, 9.9889168008950269e-01, 9.9892423195471958e-01,
    9.9895588727183782e-01, 9.9898666879785947e-01, 9.9901659877299953e-01, 9.9904569893056627e-01,
    9.9907399050671264e-01, 9.9910149425004791e-01, 9.9912823043112498e-01, 9.9915421885178946e-01,
    9.9917947885438907e-01, 9.9920402933086705e-01, 9.9922788873170609e-01, 9.9925107507475563e-01,
    9.9927360595391457e-01, 9.9929549854769262e-01, 9.9931676962764060e-01, 9.9933743556664600e-01,
    9.9935751234710679e-01, 9.9937701556897429e-01, 9.9939596045766621e-01, 9.9941436187186039e-01,
    9.9943223431115513e-01, 9.9944959192361360e-01, 9.9946644851317556e-01, 9.9948281754695179e-01,
    9.9949871216240083e-01, 9.9951414517437520e-01, 9.9952912908205616e-01, 9.9954367607576489e-01,
    9.9955779804366096e-01, 9.9957150657832150e-01, 9.9958481298320390e-01, 9.9959772827899895e-01,
    9.9961026320986712e-01, 9.9962242824956482e-01, 9.9963423360745940e-01, 9.9964568923443886e-01,
    9.9965680482870278e-01, 9.9966758984146220e-01, 9.9967805348251959e-01, 9.9968820472575470e-01,
    9.9969805231449715e-01, 9.9970760476681186e-01, 9.9971687038066614e-01, 9.9972585723901464e-01,
    9.9973457321477310e-01, 9.9974302597570330e-01, 9.9975122298920049e-01, 9.9975917152698524e-01,
    9.9976687866970582e-01, 9.9977435131144465e-01, 9.9978159616413886e-01, 9.9978861976191002e-01,
    9.9979542846530645e-01, 9.9980202846545874e-01, 9.9980842578815154e-01, 9.9981462629781159e-01,
    9.9982063570141055e-01, 9.9982645955228988e-01, 9.9983210325390637e-01, 9.9983757206349433e-01,
    9.9984287109565595e-01, 9.9984800532587326e-01, 9.9985297959393904e-01, 9.9985779860733071e-01,
    9.9986246694449032e-01, 9.9986698905805149e-01, 9.9987136927798403e-01, 9.9987561181467854e-01,
    9.9987972076195453e-01, 9.9988370010001171e-01, 9.9988755369830895e-01, 9.9989128531838134e-01,
    9.9989489861659220e-01, 9.9989839714682938e-01, 9.9990178436313437e-01, 9.9990506362227427e-01,
    9.9990823818625196e-01, 9.9991131122476851e-01, 9.9991428581761510e-01, 9.9991716495702221e-01,
    9.9991995154994717e-01, 9.9992264842031064e-01, 9.9992525831118007e-01, 9.9992778388690551e-01,
    9.9993022773520013e-01, 9.9993259236917031e-01, 9.9993488022930954e-01, 9.9993709368543005e-01,
    9.9993923503855509e-01, 9.9994130652276514e-01, 9.9994331030700312e-01, 9.9994524849682709e-01,
    9.9994712313612943e-01, 9.9994893620880965e-01, 9.9995068964040501e-01, 9.9995238529968822e-01,
    9.9995402500021313e-01, 9.9995561050183734e-01, 9.9995714351219289e-01, 9.9995862568813088e-01,
    9.9996005863712567e-01, 9.9996144391864206e-01, 9.9996278304546982e-01, 9.9996407748502869e-01,
    9.9996532866063037e-01, 9.9996653795272061e-01, 9.9996770670007884e-01, 9.9996883620099231e-01,
    9.9996992771440107e-01, 9.9997098246100968e-01, 9.9997200162437472e-01, 9.9997298635195797e-01,
    9.9997393775615906e-01, 9.9997485691531618e-01, 9.9997574487468255e-01, 9.9997660264737642e-01,
    9.9997743121530724e-01, 9.9997823153007570e-01, 9.9997900451385324e-01, 9.9997975106023074e-01,
    9.9998047203505547e-01, 9.9998116827723571e-01, 9.9998184059952733e-01, 9.9998248978930315e-01,
    9.9998311660929606e-01, 9.9998372179832140e-01, 9.9998430607198641e-01, 9.9998487012337312e-01,
    9.9998541462370782e-01, 9.9998594022300702e-01, 9.9998644755071231e-01, 9.9998693721630183e-01,
    9.9998740980988510e-01, 9.9998786590278876e-01, 9.9998830604811417e-01, 9.9998873078129025e-01,
    9.9998914062060507e-01, 9.9998953606772267e-01, 9.9998991760818989e-01, 9.9999028571192150e-01,
    9.9999064083367828e-01, 9.9999098341352821e-01, 9.9999131387729689e-01, 9.9999163263700053e-01,
    9.9999194009127357e-01, 9.9999223662577652e-01, 9.9999252261359628e-01, 9.9999279841563793e-01,
    9.9999306438099700e-01, 9.9999332084732828e-01, 9.9999356814120066e-01, 9.9999380657844184e-01,
    9.9999403646447449e-01, 9.9999425809464049e-01, 9.9999447175451617e-01, 9.9999467772022188e-01,
    9.9999487625871408e-01, 9.9999506762808177e-01, 9.9999525207781681e-01, 9.9999542984909395e-01,
    9.9999560117503250e-01, 9.9999576628094999e-01, 9.9999592538461179e-01, 9.9999607869647233e-01,
    9.9999622641990749e-01, 9.9999636875144426e-01, 9.9999650588097655e-01, 9.9999663799198069e-01,
    9.9999676526172099e-01, 9.9999688786145113e-01, 9.9999700595660734e-01, 9.9999711970699834e-01,
    9.9999722926698653e-01, 9.9999733478566410e-01, 9.9999743640702754e-01, 9.9999753427014137e-01,
    9.9999762850930196e-01, 9.9999771925419023e-01, 9.9999780663002502e-01, 9.9999789075771095e-01,
    9.9999797175397753e-01, 9.9999804973151951e-01, 9.9999812479912797e-01, 9.9999819706182258e-01,
    9.9999826662097446e-01, 9.9999833357442636e-01, 9.9999839801661161e-01, 9.9999846003867066e-01,
    9.9999851972855502e-01, 9.9999857717113771e-01, 9.9999863244831777e-01, 9.9999868563911587e-01,
    9.9999873681977458e-01, 9.9999878606385073e-01, 9.9999883344230667e-01, 9.9999887902359696e-01,
    9.9999892287375325e-01, 9.9999896505647012e-01, 9.9999900563317690e-01, 9.9999904466312295e-01,
    9.9999908220344846e-01, 9.9999911830925459e-01, 9.9999915303367537e-01, 9.9999918642794683e-01,
    9.9999921854146923e-01, 9.9999924942187080e-01, 9.9999927911506881e-01, 9.9999930766533052e-01,
    9.9999933511532801e-01, 9.9999936150619395e-01, 9.9999938687757439e-01, 9.9999941126768288e-01,
    9.9999943471334618e-01, 9.9999945725005779e-01, 9.9999947891201912e-01, 9.9999949973218827e-01,
    9.9999951974232271e-01, 9.9999953897302052e-01, 9.9999955745376146e-01, 9.9999957521294824e-01,
    9.9999959227794089e-01, 9.9999960867509607e-01, 9.9999962442980161e-01, 9.9999963956651250e-01,
    9.9999965410878067e-01, 9.9999966807929141e-01, 9.9999968149988938e-01, 9.9999969439161152e-01,
    9.9999970677471650e-01, 9.9999971866871018e-01, 9.9999973009237342e-01, 9.9999974106378986e-01,
    9.9999975160036780e-01, 9.9999976171886706e-01, 9.9999977143542063e-01, 9.9999978076555862e-01,
    9.9999978972422965e-01, 9.9999979832582075e-01, 9.9999980658417897e-01, 9.9999981451263076e-01,
    9.9999982212400074e-01, 9.9999982943062971e-01, 9.9999983644439250e-01, 9.9999984317671520e-01,
    9.9999984963859123e-01, 9.9999985584059725e-01, 9.9999986179290801e-01, 9.9999986750531322e-01,
    9.9999987298722715e-01, 9.9999987824770786e-01, 9.9999988329546685e-01, 9.9999988813888308e-01,
    9.9999989278601364e-01, 9.9999989724460947e-01, 9.9999990152212181e-01, 9.9999990562571717e-01,
    9.9999990956228713e-01, 9.9999991333845561e-01, 9.9999991696059265e-01, 9.9999992043482255e-01,
    9.9999992376703351e-01, 9.9999992696288398e-01, 9.9999993002781462e-01, 9.9999993296705503e-01,
    9.9999993578563073e-01, 9.9999993848837354e-01, 9.9999994107992451e-01, 9.9999994356474620e-01,
    9.9999994594712638e-01, 9.9999994823118399e-01, 9.9999995042087886e-01, 9.9999995252001317e-01,
    9.9999995453224266e-01, 9.9999995646107720e-01, 9.9999995830989008e-01, 9.9999996008192138e-01,
    9.9999996178028294e-01, 9.9999996340796482e-01, 9.9999996496783849e-01, 9.9999996646266109e-01,
    9.9999996789508105e-01, 9.9999996926764312e-01, 9.9999997058278856e-01, 9.9999997184286338e-01,
    9.9999997305011956e-01, 9.9999997420671938e-01, 9.9999997531473939e-01, 9.9999997637617200e-01,
    9.9999997739293178e-01, 9.9999997836685428e-01, 9.9999997929970386e-01, 9.9999998019317249e-01,
    9.9999998104888521e-01, 9.9999998186840067e-01, 9.9999998265321544e-01, 9.9999998340476548e-01,
    9.9999998412442925e-01, 9.9999998481352903e-01, 9.9999998547333369e-01, 9.9999998610506069e-01,
    9.9999998670987877e-01, 9.9999998728890804e-01, 9.9999998784322386e-01, 9.9999998837385784e-01,
    9.9999998888179908e-01, 9.9999998936799739e-01, 9.9999998983336302e-01, 9.9999999027876851e-01,
    9.9999999070505208e-01, 9.9999999111301596e-01, 9.9999999150343100e-01, 9.9999999187703625e-01,
    9.9999999223453884e-01, 9.9999999257661865e-01, 9.9999999290392616e-01, 9.9999999321708632e-01,
    9.9999999351669733e-01, 9.9999999380333315e-01, 9.9999999407754392e-01, 9.9999999433985620e-01,
    9.9999999459077604e-01, 9.9999999483078761e-01, 9.9999999506035542e-01, 9.9999999527992411e-01,
    9.9999999548992047e-01, 9.9999999569075282e-01, 9.9999999588281308e-01, 9.9999999606647672e-01,
    9.9999999624210245e-01, 9.9999999641003579e-01, 9.9999999657060645e-01, 9.9999999672413020e-01,
    9.9999999687091046e-01, 9.9999999701123743e-01, 9.9999999714538923e-01, 9.9999999727363165e-01,
    9.9999999739621992e-01, 9.9999999751339863e-01, 9.9999999762540148e-01, 9.9999999773245285e-01,
    9.9999999783476701e-01, 9.9999999793254890e-01, 9.9999999802599615e-01, 9.9999999811529694e-01,
    9.9999999820063146e-01, 9.9999999828217301e-01, 9.9999999836008557e-01, 9.9999999843452869e-01,
    9.9999999850565369e-01, 9.9999999857360522e-01, 9.9999999863852229e-01, 9.9999999870053757e-01,
    9.9999999875977874e-01, 9.9999999881636714e-01, 9.9999999887041935e-01, 9.9999999892204727e-01,
    9.9999999897135716e-01, 9.9999999901845105e-01, 9.9999999906342696e-01, 9.9999999910637771e-01,
    9.9999999914739413e-01, 9.9999999918655980e-01, 9.9999999922395855e-01, 9.9999999925966732e-01,
    9.9999999929376127e-01, 9.9999999932631245e-01, 9.9999999935738926e-01, 9.9999999938705697e-01,
    9.9999999941537843e-01, 9.9999999944241391e-01, 9.9999999946822071e-01, 9.9999999949285323e-01,
    9.9999999951636420e-01, 9.9999999953880347e-01, 9.9999999956021912e-01, 9.9999999958065777e-01,
    9.9999999960016206e-01, 9.9999999961877428e-01, 9.9999999963653474e-01, 9.9999999965348163e-01,
    9.9999999966965181e-01, 9.9999999968507947e-01, 9.9999999969979880e-01, 9.9999999971384146e-01,
    9.9999999972723808e-01, 9.9999999974001796e-01, 9.9999999975220888e-01, 9.9999999976383724e-01,
    9.9999999977492937e-01, 9.9999999978550869e-01, 9.9999999979559884e-01, 9.9999999980522158e-01,
    9.9999999981439924e-01, 9.9999999982315124e-01, 9.9999999983149734e-01, 9.9999999983945542e-01,
    9.9999999984704446e-01, 9.9999999985427979e-01, 9.9999999986117882e-01, 9.9999999986775612e-01,
    9.9999999987402677e-01, 9.9999999988000499e-01, 9.9999999988570376e-01, 9.9999999989113630e-01,
    9.9999999989631472e-01, 9.9999999990125055e-01, 9.9999999990595501e-01, 9.9999999991043920e-01,
    9.9999999991471233e-01, 9.9999999991878541e-01, 9.9999999992266642e-01, 9.9999999992636557e-01,
    9.9999999992988986e-01, 9.9999999993324840e-01, 9.9999999993644817e-01, 9.9999999993949706e-01,
    9.9999999994240196e-01, 9.9999999994516975e-01, 9.9999999994780620e-01, 9.9999999995031807e-01,
    9.9999999995271049e-01, 9.9999999995498978e-01, 9.9999999995716093e-01, 9.9999999995922872e-01,
    9.9999999996119815e-01, 9.9999999996307398e-01, 9.9999999996486066e-01, 9.9999999996656219e-01,
    9.9999999996818245e-01, 9.9999999996972511e-01, 9.9999999997119426e-01, 9.9999999997259337e-01,
    9.9999999997392541e-01, 9.9999999997519362e-01, 9.9999999997640099e-01, 9.9999999997755040e-01,
    9.9999999997864486e-01, 9.9999999997968647e-01, 9.9999999998067846e-01, 9.9999999998162237e-01,
    9.9999999998252087e-01, 9.9999999998337619e-01, 9.9999999998418987e-01, 9.9999999998496480e-01,
    9.9999999998570210e-01, 9.9999999998640354e-01, 9.9999999998707145e-01, 9.9999999998770672e-01,
    9.9999999998831135e-01, 9.9999999998888656e-01, 9.9999999998943434e-01, 9.9999999998995492e-01,
    9.9999999999045042e-01, 9.9999999999092171e-01, 9.9999999999137013e-01, 9.9999999999179690e-01,
    9.9999999999220257e-01, 9.9999999999258848e-01, 9.9999999999295575e-01, 9.9999999999330536e-01,
    9.9999999999363742e-01, 9.9999999999395350e-01, 9.9999999999425371e-01, 9.9999999999453937e-01,
    9.9999999999481126e-01, 9.9999999999506961e-01, 9.9999999999531497e-01, 9.9999999999554867e-01,
    9.9999999999577116e-01, 9.9999999999598188e-01, 9.9999999999618294e-01, 9.9999999999637368e-01,
    9.9999999999655509e-01, 9.9999999999672773e-01, 9.9999999999689138e-01, 9.9999999999704736e-01,
    9.9999999999719558e-01, 9.9999999999733646e-01, 9.9999999999747036e-01, 9.9999999999759770e-01,
    9.9999999999771860e-01, 9.9999999999783329e-01, 9.9999999999794276e-01, 9.9999999999804645e-01,
    9.9999999999814515e-01, 9.9999999999823863e-01, 9.9999999999832767e-01, 9.9999999999841238e-01,
    9.9999999999849254e-01, 9.9999999999856903e-01, 9.9999999999864142e-01, 9.9999999999871036e-01,
    9.9999999999877587e-01, 9.9999999999883804e-01, 9.9999999999889688e-01, 9.9999999999895295e-01,
    9.9999999999900635e-01, 9.9999999999905675e-01, 9.9999999999910483e-01, 9.9999999999915068e-01,
    9.9999999999919409e-01, 9.9999999999923528e-01, 9.9999999999927447e-01, 9.9999999999931133e-01,
    9.9999999999934663e-01, 9.9999999999938038e-01, 9.9999999999941191e-01, 9.9999999999944200e-01,
    9.9999999999947087e-01, 9.9999999999949774e-01, 9.9999999999952360e-01, 9.9999999999954814e-01,
    9.9999999999957156e-01, 9.9999999999959321e-01, 9.9999999999961442e-01, 9.9999999999963407e-01,
    9.9999999999965317e-01, 9.9999999999967093e-01, 9.9999999999968803e-01, 9.9999999999970413e-01,
    9.9999999999971956e-01, 9.9999999999973399e-01, 9.9999999999974787e-01, 9.9999999999976086e-01,
    9.9999999999977329e-01, 9.9999999999978506e-01, 9.9999999999979627e-01, 9.9999999999980693e-01,
    9.9999999999981659e-01, 9.9999999999982625e-01, 9.9999999999983535e-01, 9.9999999999984390e-01,
    9.9999999999985212e-01, 9.9999999999985978e-01, 9.9999999999986711e-01, 9.9999999999987410e-01,
    9.9999999999988065e-01, 9.9999999999988676e-01, 9.9999999999989286e-01, 9.9999999999989864e-01,
    9.9999999999990385e-01, 9.9999999999990885e-01, 9.9999999999991351e-01, 9.9999999999991818e-01,
    9.9999999999992228e-01, 9.9999999999992650e-01, 9.9999999999993050e-01, 9.9999999999993405e-01,
    9.9999999999993761e-01, 9.9999999999994094e-01, 9.9999999999994404e-01, 9.9999999999994671e-01,
    9.9999999999994960e-01, 9.9999999999995226e-01, 9.9999999999995481e-01, 9.9999999999995703e-01,
    9.9999999999995970e-01, 9.9999999999996192e-01, 9.9999999999996370e-01, 9.9999999999996581e-01,
    9.9999999999996769e-01, 9.9999999999996936e-01, 9.9999999999997091e-01, 9.9999999999997224e-01,
    9.9999999999997391e-01, 9.9999999999997546e-01, 9.9999999999997657e-01, 9.9999999999997780e-01,
    9.9999999999997913e-01, 9.9999999999998002e-01, 9.9999999999998124e-01,
])

S_GRID = S_MIN + S_STEP * np.arange(CDF.size)
