import io
import json
import os
import tempfile
import unittest
from unittest import mock
from cayleylab.cli import parse_spec, run, report_json, validate_report_json, render, SpecParseError
from cayleylab.cli import EXIT_OK, EXIT_USAGE
from cayleylab.fs import Filesystem, MockFilesystem
from cayleylab.acceptance import Suite, run_suite
from cayleylab.tgraph import cycle_set, path_set, star_set, ConsistencyError
from cayleylab.theory import full_report

SLOW = os.environ.get('CAYLEYLAB_SLOW_TESTS') == '1'


class ParseSpecTests(unittest.TestCase):
    def testEdgeList(self):
        self.assertEqual(parse_spec('1-2 2-3 3-4 4-1', MockFilesystem()), cycle_set(4))

    def testPresets(self):
        fs = MockFilesystem()
        self.assertEqual(parse_spec('cycle:5', fs), cycle_set(5))
        self.assertEqual(parse_spec('path:3', fs), path_set(3))
        self.assertEqual(parse_spec('star:4', fs), star_set(4))
        self.assertEqual(parse_spec('tree:1,1', fs), star_set(4))
        self.assertEqual(parse_spec('tree:2 3', fs), path_set(4))

    def testErrors(self):
        """Malformed specs report where parsing failed."""
        fs = MockFilesystem()
        with self.assertRaises(SpecParseError) as cm:
            parse_spec('1-1', fs)
        self.assertEqual(cm.exception.position, 0)
        with self.assertRaises(SpecParseError) as cm:
            parse_spec('1-2 1-2', fs)
        self.assertEqual(cm.exception.position, 4)
        with self.assertRaises(SpecParseError) as cm:
            parse_spec('path:1', fs)
        self.assertEqual(cm.exception.position, 5)
        for bad in ('', 'cycle:2', 'cycle:x', 'tree:9', 'wheel:5', '1-2 x', '\uff11-2', '1-\u0662'):
            with self.assertRaises(SpecParseError):
                parse_spec(bad, fs)

    def testFile(self):
        fs = MockFilesystem({'c4.txt': '# the 4-cycle\n1-2 2-3\n3-4 4-1\n'})
        self.assertEqual(parse_spec('c4.txt', fs), cycle_set(4))
        self.assertEqual(fs.reads, ['c4.txt'])

    def testNonUtf8File(self):
        """A file that is not UTF-8 text is an input error, not a crash."""
        with tempfile.TemporaryDirectory() as d:
            fileName = os.path.join(d, 'bad.txt')
            with open(fileName, 'wb') as fo:
                fo.write(b'1-2 2-3\xff\n')
            with self.assertRaises(SpecParseError) as cm:
                parse_spec(fileName, Filesystem())
            self.assertEqual(cm.exception.position, 7)
            with mock.patch('sys.stderr', new_callable=io.StringIO) as err:
                code = run(['analyze', fileName], out=io.StringIO(), environ={})
            self.assertEqual(code, EXIT_USAGE)
            self.assertIn('not UTF-8', err.getvalue())

    def testPoints(self):
        fs = MockFilesystem()
        self.assertEqual(parse_spec('1-2', fs, n=3).n, 3)
        with self.assertRaises(SpecParseError):
            parse_spec('1-3', fs, n=2)


class CommandTests(unittest.TestCase):
    def runCli(self, *argv):
        out = io.StringIO()
        with mock.patch('sys.stderr', new_callable=io.StringIO) as err:
            code = run(list(argv), fs=MockFilesystem(), out=out, environ={})
        return code, out.getvalue(), err.getvalue()

    def testAnalyzeJson(self):
        """'analyze cycle:4 --json': 768 automorphisms, Klein four L_e, R(S_4) not normal."""
        code, out, _ = self.runCli('analyze', 'cycle:4', '--json')
        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertEqual(data['aut_order'], 768)
        self.assertTrue(data['le_is_klein'])
        self.assertFalse(data['r_normal'])
        self.assertEqual(data['input'], '1-2 2-3 3-4 1-4')
        self.assertEqual(out.strip(), json.dumps(data, sort_keys=True, indent=2))

    def testAnalyzeTable(self):
        code, out, _ = self.runCli('analyze', 'path:3')
        self.assertEqual(code, EXIT_OK)
        self.assertIn('|Aut|', out)
        autLine = [line for line in out.splitlines() if line.startswith('|Aut| ')][0]
        self.assertEqual(autLine.split()[-1], '12')

    def testAnalyzeSkipFullAut(self):
        code, out, _ = self.runCli('analyze', 'cycle:5', '--json', '--skip-full-aut')
        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertIsNone(data['aut_order'])
        self.assertEqual(data['theorem4'], {'checked': 5, 'failures': []})

    def testAnalyzeDisconnected(self):
        code, _, err = self.runCli('analyze', '1-2 3-4')
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn('S does not generate S_4', err)

    def testAnalyzeMaxN(self):
        code, _, err = self.runCli('analyze', 'path:5', '--max-n', '4')
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn('cap', err)

    def testAnalyzeFarOverCap(self):
        """A huge preset is refused by the cap before anything of size n is built."""
        code, _, err = self.runCli('analyze', 'path:100000')
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn('cap', err)

    def testCycles(self):
        code, out, _ = self.runCli('cycles', 'cycle:4', '--t', '1-2', '--k', '2-3', '--len', '6')
        self.assertEqual(code, EXIT_OK)
        lines = out.strip().splitlines()
        self.assertEqual(len(lines), 9)
        self.assertTrue(lines[-1].startswith('8 6-cycle(s)'))
        self.assertIn('6 distinct vertices at distance 3', lines[-1])
        self.assertTrue(all(line.startswith('e -> ') for line in lines[:-1]))

        code, out, _ = self.runCli('cycles', 'path:4', '--t', '1-2', '--k', '3-4', '--len', '4')
        self.assertTrue(out.strip().splitlines()[-1].startswith('1 4-cycle(s)'))
        code, out, _ = self.runCli('cycles', 'cycle:5', '--t', '1-2', '--k', '2-3', '--len', '6')
        self.assertTrue(out.strip().splitlines()[-1].startswith('1 6-cycle(s)'))

    def testCyclesUsageErrors(self):
        code, _, err = self.runCli('cycles', 'path:4', '--t', '1-3', '--k', '3-4')
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn('not in S', err)
        code, _, _ = self.runCli('cycles', 'path:4', '--t', '1-2', '--k', '3-4', '--len', '6')
        self.assertEqual(code, EXIT_USAGE)

    def testArgparseErrorsExitOne(self):
        with mock.patch('sys.stderr', new_callable=io.StringIO):
            with self.assertRaises(SystemExit) as cm:
                run(['analyze'], out=io.StringIO(), environ={})
        self.assertEqual(cm.exception.code, EXIT_USAGE)


class ReportFormatTests(unittest.TestCase):
    def testSchema(self):
        text = report_json(full_report(path_set(3)))
        data = validate_report_json(text)
        self.assertEqual(data['girth'], 'infinite')
        self.assertEqual(data['theorem1'], {'applicable': True, 'confirmed': True})
        self.assertEqual(list(data), sorted(data))

    def testInvalid(self):
        with self.assertRaises(ConsistencyError):
            validate_report_json('{}')

    def testRenderCycles(self):
        out = render('cycles.jinja.txt', cycles=['e -> (1,2)'], length=4, t='(1,2)', k='(3,4)', far=None)
        self.assertEqual(out, 'e -> (1,2)\n1 4-cycle(s) through e, (1,2) and (3,4)\n')


class AcceptanceTests(unittest.TestCase):
    def testFourCycleRows(self):
        rows = Suite().fourCycleRows()
        self.assertTrue(all(row.passed for row in rows), rows)
        self.assertIn('192 != 768', rows[-1].anchor)

    def testTriangleAndTreeRows(self):
        suite = Suite()
        rows = suite.triangleRow() + suite.treeRows()
        self.assertTrue(all(row.passed for row in rows), rows)

    def testFullSuite(self):
        """Every row of the table, including the exhaustive sweeps over n <= 5 and the brute-force oracle."""
        rows = run_suite()
        self.assertEqual(set(row.number for row in rows),
                         {'1', '2', '3', '4', '4b', '4c', '5', '6', '7', '8', '9', '10', '11'})
        self.assertTrue(all(row.passed for row in rows), [row for row in rows if not row.passed])

    @unittest.skipUnless(SLOW, 'set CAYLEYLAB_SLOW_TESTS=1 for the n = 6 rows')
    def testSlowSuite(self):
        rows = run_suite(slow=True)
        self.assertIn('12', [row.number for row in rows])
        self.assertTrue(all(row.passed for row in rows), [row for row in rows if not row.passed])
